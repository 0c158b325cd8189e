#pragma once

// Combinatorial knot-diagram invariants: Tait graphs, spanning-tree delta
// gradings, Turaev genus, Goeritz signatures, and the concordance bounds that
// tie them together.

#include "knotcomb/bounds.hpp"
#include "knotcomb/braid3.hpp"
#include "knotcomb/diagram.hpp"
#include "knotcomb/errors.hpp"
#include "knotcomb/exact.hpp"
#include "knotcomb/goeritz.hpp"
#include "knotcomb/report.hpp"
#include "knotcomb/ribbon.hpp"
#include "knotcomb/tait.hpp"
#include "knotcomb/tree_delta.hpp"
