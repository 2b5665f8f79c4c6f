#ifndef QSEP_QSEP_HPP
#define QSEP_QSEP_HPP

#include "congruence.hpp"
#include "core.hpp"
#include "decomposition.hpp"
#include "enumeration.hpp"
#include "parallel.hpp"
#include "properties.hpp"
#include "relation.hpp"
#include "report.hpp"
#include "text_format.hpp"
#include "verification.hpp"
#include "zoo.hpp"

#endif  // QSEP_QSEP_HPP
