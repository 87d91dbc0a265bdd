#pragma once

#include <map>
#include <string>
#include <vector>

#include "plab/bracket_expr.hpp"
#include "plab/tangle.hpp"
#include "plab/vrc.hpp"

namespace plab {

// A promotion: tangle, brushing, signs, and the per-blob closed-form
// substitution tables mapping blob labels to vector expressions in the outer
// columns (labels without an entry pass through unchanged).
struct Promotion {
    std::string family;
    int m = 0;
    int n = 0;
    Tangle tangle;
    Brushing brushing;
    std::map<int, int> signs;  // attach vertex -> +-1, default +1
    std::vector<std::map<std::string, ExprPtr>> subs;  // per blob

    const std::vector<std::string>& blob_labels(int i) const { return tangle.blobs[i].labels; }
};

Promotion star_promotion(int m, int n);
Promotion bcfw_promotion(int n, int a);
Promotion spurion_promotion(int n);
Promotion chain_tree_promotion(int n);
Promotion forest_promotion(int n, int a);

// Spurion-style frozen factors: the label-i erasure of <123*456*789>.
ExprPtr spurion_f(int i);
// Chain-tree frozen factors: the label-i erasure of <(123*456)7(89A*BCD)>.
ExprPtr chain_f(int i);

// Closed-form route: substituted columns of one blob, in blob label order.
template <class K>
Mat<K> apply_promotion(const Promotion& p, const Mat<K>& z, int blob) {
    Point<K> pt = Point<K>::from_matrix(z, index_labels(p.n));
    EvalCache<K> cache;
    Mat<K> out(pt.m, static_cast<int>(p.blob_labels(blob).size()));
    int c = 0;
    for (const std::string& label : p.blob_labels(blob)) {
        auto it = p.subs[blob].find(label);
        std::vector<K> col;
        if (it == p.subs[blob].end()) {
            col = pt.cols.at(label);
        } else {
            Multivector<K> v = eval_expr(it->second, pt, cache);
            if (v.is_zero() || v.grade() != 1) throw EvalError("substitution is not a vector", label);
            col = v.as_vector();
        }
        out.set_col(c++, col);
    }
    return out;
}

// Point binding for pullback: blob labels bound to the substituted columns.
template <class K>
Point<K> pullback_point(const Promotion& p, const Mat<K>& z, int blob) {
    Mat<K> cols = apply_promotion(p, z, blob);
    return Point<K>::from_matrix(cols, p.blob_labels(blob));
}

struct DegenerateBlob : std::runtime_error {
    explicit DegenerateBlob(const std::string& what) : std::runtime_error(what) {}
};

// Weight of a brush path traversed source-to-target: black-to-white steps
// multiply by r_e, white-to-black steps by -r_e in the denominator.
Rat brush_path_weight(const PlabicGraph& g, const VRC& v, int start_vertex, const std::vector<int>& edges);

// Pinned blob matrices from a solved configuration: columns
// sigma_b * v_b / wt(P_u) in label order.
std::vector<MatQ> promote_with_vrc(const Tangle& t, const Brushing& br, const std::map<int, int>& signs, const VRC& v,
                                   const MatQ& z);

// Geometric route: solve the configuration on the tree core, then pin.
std::vector<MatQ> tree_promotion(const Tangle& t, const Brushing& br, const std::map<int, int>& signs, const MatQ& z);

// Promotion of the composed tangle (its configuration assembled from the two
// tree solves, paths concatenated through the glued vertices) against the
// two-step substitution; equality is column-by-column up to scaling.
bool verify_composition(const Promotion& outer, int i, const Promotion& inner, const MatQ& z);

}  // namespace plab
