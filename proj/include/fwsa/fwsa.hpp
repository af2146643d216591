#pragma once

#include "fwsa/cyclotomic.hpp"
#include "fwsa/group.hpp"
#include "fwsa/labeled.hpp"
#include "fwsa/linalg.hpp"
#include "fwsa/module.hpp"
#include "fwsa/modules.hpp"
#include "fwsa/module_spec.hpp"
#include "fwsa/generation.hpp"
#include "fwsa/hilbert.hpp"
#include "fwsa/report.hpp"
