#ifndef SIGNULL_SIGNULL_HPP
#define SIGNULL_SIGNULL_HPP

#include "signull/canonical.hpp"
#include "signull/enumeration.hpp"
#include "signull/exact_rank.hpp"
#include "signull/graph_io.hpp"
#include "signull/int_matrix.hpp"
#include "signull/recognizers.hpp"
#include "signull/reductions.hpp"
#include "signull/report.hpp"
#include "signull/signed_graph.hpp"
#include "signull/verification.hpp"

#endif  // SIGNULL_SIGNULL_HPP
