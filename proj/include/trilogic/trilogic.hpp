#pragma once

#include "trilogic/analysis.hpp"
#include "trilogic/catalog.hpp"
#include "trilogic/family.hpp"
#include "trilogic/formula.hpp"
#include "trilogic/laws.hpp"
#include "trilogic/logic_spec.hpp"
#include "trilogic/parser.hpp"
#include "trilogic/report.hpp"
#include "trilogic/semantics.hpp"
#include "trilogic/truth_table.hpp"
#include "trilogic/truth_value.hpp"
