#pragma once

#include "hornkit/attr_set.hpp"
#include "hornkit/canonical_bases.hpp"
#include "hornkit/closure.hpp"
#include "hornkit/compact_enumeration.hpp"
#include "hornkit/direct_bases.hpp"
#include "hornkit/dualization.hpp"
#include "hornkit/error.hpp"
#include "hornkit/implication.hpp"
#include "hornkit/limits.hpp"
#include "hornkit/prime_implicates.hpp"
#include "hornkit/set_family.hpp"
#include "hornkit/text_format.hpp"
#include "hornkit/universe.hpp"
