#pragma once

#include <cstdint>
#include <vector>

#include "plab/plabic_graph.hpp"

namespace plab {

// Number of move-equivalence classes of (k,m)-amplitrees: canonical plane
// trees on k*m+1 clockwise boundary leaves, internal vertices of degree >= 3
// properly 2-colored, k-statistic k, every edge cut balanced.
unsigned long long count_amplitrees(int k, int m, int cap_n = 64);

// Materialized canonical representatives (same trees the counter counts).
std::vector<PlabicGraph> generate_amplitrees(int k, int m, size_t limit = SIZE_MAX);

// Canonical plane trees of type (k, k*m+1) that fail the balance condition.
std::vector<PlabicGraph> generate_type_trees_unbalanced(int k, int m, size_t limit = SIZE_MAX);

bool k2_closed_form_check(int max_m);
bool k2_recurrence_check(int max_m);
// Generating-function checks under the Table-consistent convention: the
// enumerated count for m is the coefficient of x^(m-1).
bool k2_gf_check(int max_m);
bool k3_gf_check(int max_m);
// The naive x^m convention, reported for comparison (fails at m = 1).
bool k2_gf_naive_convention_check(int max_m);

unsigned long long k2_gf_coefficient(int j);  // [x^j] (1+x)/(1-x)^4
unsigned long long k3_gf_coefficient(int j);  // [x^j] (1+28x+56x^2+14x^3)/(1-x)^7

}  // namespace plab
