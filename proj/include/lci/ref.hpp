#pragma once

#include "lci/discrete.hpp"

namespace lci::ref {

/// Plain single-threaded reference implementations of the parallel kernels.
/// Written independently of the OpenMP paths; the tests assert agreement and
/// the bench tool compares timings.

MarginTable<double> margin(const DiscreteJoint& d, const IndexSet& vars);

CheckReport check_hibi_relation(const DiscreteJoint& d, const IndexSet& i, const IndexSet& j,
                                double tol);

CheckReport check_ci(const DiscreteJoint& d, const CiStatement& s, double tol);

double shannon_H(const DiscreteJoint& d, const IndexSet& i);

std::vector<IndexSet> minimize_supports(std::vector<IndexSet> supports);

} // namespace lci::ref
