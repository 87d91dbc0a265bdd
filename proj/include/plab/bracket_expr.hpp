#pragma once

#include <cctype>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "plab/multivector.hpp"

namespace plab {

// Expression trees over labeled columns, evaluable at Grassmannian points.
// Subtrees are shared (DAG); evaluation memoizes per node.
struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Kind { Column, IntConst, Wedge, Shuffle, Product, Quotient, Sum, Bracket };
    Kind kind;
    std::string label;       // Column
    long ival = 0;           // IntConst
    std::vector<ExprPtr> kids;
};

struct EvalError : std::runtime_error {
    EvalError(const std::string& what, std::string path_)
        : std::runtime_error(what + " at " + path_), path(std::move(path_)) {}
    std::string path;
};

namespace ex {

inline ExprPtr make(ExprNode::Kind k, std::vector<ExprPtr> kids) {
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    n->kids = std::move(kids);
    return n;
}
inline ExprPtr col(std::string label) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::Column;
    n->label = std::move(label);
    return n;
}
inline ExprPtr iconst(long v) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::IntConst;
    n->ival = v;
    return n;
}
inline ExprPtr wedge(ExprPtr a, ExprPtr b) { return make(ExprNode::Kind::Wedge, {std::move(a), std::move(b)}); }
inline ExprPtr shuffle(ExprPtr a, ExprPtr b) { return make(ExprNode::Kind::Shuffle, {std::move(a), std::move(b)}); }
inline ExprPtr prod(ExprPtr a, ExprPtr b) { return make(ExprNode::Kind::Product, {std::move(a), std::move(b)}); }
inline ExprPtr quot(ExprPtr a, ExprPtr b) { return make(ExprNode::Kind::Quotient, {std::move(a), std::move(b)}); }
inline ExprPtr sum(ExprPtr a, ExprPtr b) { return make(ExprNode::Kind::Sum, {std::move(a), std::move(b)}); }
inline ExprPtr bracket(ExprPtr a) { return make(ExprNode::Kind::Bracket, {std::move(a)}); }
inline ExprPtr neg(ExprPtr a) { return prod(iconst(-1), std::move(a)); }
inline ExprPtr diff(ExprPtr a, ExprPtr b) { return sum(std::move(a), neg(std::move(b))); }

inline ExprPtr wedge_cols(const std::vector<std::string>& labels) {
    if (labels.empty()) throw std::invalid_argument("wedge_cols: empty");
    ExprPtr e = col(labels[0]);
    for (size_t i = 1; i < labels.size(); ++i) e = wedge(e, col(labels[i]));
    return e;
}
inline ExprPtr bracket_cols(const std::vector<std::string>& labels) { return bracket(wedge_cols(labels)); }

inline ExprPtr prod_all(const std::vector<ExprPtr>& xs) {
    if (xs.empty()) return iconst(1);
    ExprPtr e = xs[0];
    for (size_t i = 1; i < xs.size(); ++i) e = prod(e, xs[i]);
    return e;
}

}  // namespace ex

// Point of a Grassmannian: ambient dimension plus labeled columns.
template <class K>
struct Point {
    int m = 0;
    std::map<std::string, std::vector<K>> cols;

    static Point from_matrix(const Mat<K>& z, const std::vector<std::string>& labels) {
        if (static_cast<int>(labels.size()) != z.cols()) throw std::invalid_argument("Point: label count mismatch");
        Point p;
        p.m = z.rows();
        for (int c = 0; c < z.cols(); ++c) p.cols[labels[c]] = z.col(c);
        return p;
    }
};

// Standard single-character label alphabet: 1..9 then A..Z.
inline std::string index_label(int i) {
    if (i >= 1 && i <= 9) return std::string(1, char('0' + i));
    if (i >= 10 && i <= 35) return std::string(1, char('A' + i - 10));
    throw std::out_of_range("index_label: index out of alphabet");
}
inline std::vector<std::string> index_labels(int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back(index_label(i));
    return v;
}

// Keyed by the shared node handle: entries keep their subtrees alive, so
// recycled addresses can never alias a stale value.
template <class K>
using EvalCache = std::unordered_map<ExprPtr, Multivector<K>>;

template <class K>
Multivector<K> eval_expr(const ExprPtr& e, const Point<K>& pt, EvalCache<K>& cache, const std::string& path = "$") {
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    using Kind = ExprNode::Kind;
    Multivector<K> r(pt.m);
    switch (e->kind) {
        case Kind::Column: {
            auto c = pt.cols.find(e->label);
            if (c == pt.cols.end()) throw EvalError("unbound column '" + e->label + "'", path);
            r = Multivector<K>::from_vector(pt.m, c->second);
            break;
        }
        case Kind::IntConst:
            r = Multivector<K>::scalar(pt.m, K(e->ival));
            break;
        case Kind::Wedge:
            r = wedge(eval_expr(e->kids[0], pt, cache, path + ".0"), eval_expr(e->kids[1], pt, cache, path + ".1"));
            break;
        case Kind::Shuffle:
            r = shuffle(eval_expr(e->kids[0], pt, cache, path + ".0"), eval_expr(e->kids[1], pt, cache, path + ".1"));
            break;
        case Kind::Sum:
            r = eval_expr(e->kids[0], pt, cache, path + ".0") + eval_expr(e->kids[1], pt, cache, path + ".1");
            break;
        case Kind::Product: {
            Multivector<K> a = eval_expr(e->kids[0], pt, cache, path + ".0");
            Multivector<K> b = eval_expr(e->kids[1], pt, cache, path + ".1");
            if (!a.is_zero() && a.grade() == 0) r = a.as_scalar() * b;
            else if (!b.is_zero() && b.grade() == 0) r = b.as_scalar() * a;
            else if (a.is_zero() || b.is_zero()) r = Multivector<K>(pt.m);
            else throw EvalError("product requires a scalar factor", path);
            break;
        }
        case Kind::Quotient: {
            Multivector<K> a = eval_expr(e->kids[0], pt, cache, path + ".0");
            Multivector<K> b = eval_expr(e->kids[1], pt, cache, path + ".1");
            K d = b.is_zero() ? K(0) : b.as_scalar();
            if (is_zero(d)) throw EvalError("division by zero", path + ".1");
            r = (K(1) / d) * a;
            break;
        }
        case Kind::Bracket:
            r = Multivector<K>::scalar(pt.m, bracket(eval_expr(e->kids[0], pt, cache, path + ".0")));
            break;
    }
    cache.emplace(e, r);
    return r;
}

template <class K>
Multivector<K> eval_expr(const ExprPtr& e, const Point<K>& pt) {
    EvalCache<K> cache;
    return eval_expr(e, pt, cache);
}

template <class K>
K eval_scalar(const ExprPtr& e, const Point<K>& pt, EvalCache<K>& cache) {
    Multivector<K> v = eval_expr(e, pt, cache);
    if (v.is_zero()) return K(0);
    if (v.grade() != 0) throw std::domain_error("eval_scalar: non-scalar value");
    return v.as_scalar();
}

template <class K>
K eval_scalar(const ExprPtr& e, const Point<K>& pt) {
    EvalCache<K> cache;
    return eval_scalar(e, pt, cache);
}

// ---------------------------------------------------------------------------
// Text grammar. Whitespace-insensitive. Columns are alphanumeric tokens
// (single characters; multi-digit runs are integer literals). Operators:
// `^` wedge, `*` shuffle, `.` scalar product, `/` quotient, `+` `-` sums,
// `<...>` bracket, parentheses for grouping.
// ---------------------------------------------------------------------------

std::string print_expr(const ExprPtr& e);
ExprPtr parse_expr(const std::string& text);

namespace detail_expr {

inline int precedence(ExprNode::Kind k) {
    using Kind = ExprNode::Kind;
    switch (k) {
        case Kind::Sum: return 1;
        case Kind::Shuffle:
        case Kind::Product:
        case Kind::Quotient: return 2;
        case Kind::Wedge: return 3;
        default: return 4;
    }
}

inline void print_rec(const ExprPtr& e, std::ostream& os, int parent_prec) {
    using Kind = ExprNode::Kind;
    int prec = precedence(e->kind);
    bool paren = prec < parent_prec;
    switch (e->kind) {
        case Kind::Column: os << e->label; return;
        case Kind::IntConst: os << e->ival; return;
        case Kind::Bracket:
            os << "<";
            print_rec(e->kids[0], os, 0);
            os << ">";
            return;
        default: break;
    }
    if (paren) os << "(";
    const char* op = nullptr;
    switch (e->kind) {
        case Kind::Sum: op = "+"; break;
        case Kind::Shuffle: op = "*"; break;
        case Kind::Product: op = "."; break;
        case Kind::Quotient: op = "/"; break;
        case Kind::Wedge: op = "^"; break;
        default: break;
    }
    print_rec(e->kids[0], os, prec);
    os << op;
    // left-associative: right child needs strictly higher precedence standing
    print_rec(e->kids[1], os, prec + 1);
    if (paren) os << ")";
}

struct Parser {
    std::string s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n' || s[pos] == ',')) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char get() {
        skip_ws();
        if (pos >= s.size()) throw std::invalid_argument("parse_expr: unexpected end of input");
        return s[pos++];
    }
    void expect(char c) {
        char g = get();
        if (g != c) throw std::invalid_argument(std::string("parse_expr: expected '") + c + "', got '" + g + "'");
    }

    ExprPtr parse_sum() {
        ExprPtr e;
        bool neg_first = false;
        if (peek() == '-') { get(); neg_first = true; }
        e = parse_term();
        if (neg_first) e = ex::neg(e);
        while (true) {
            char c = peek();
            if (c == '+') { get(); e = ex::sum(e, parse_term()); }
            else if (c == '-') { get(); e = ex::diff(e, parse_term()); }
            else break;
        }
        return e;
    }
    ExprPtr parse_term() {
        ExprPtr e = parse_wedge();
        while (true) {
            char c = peek();
            if (c == '*') { get(); e = ex::shuffle(e, parse_wedge()); }
            else if (c == '.') { get(); e = ex::prod(e, parse_wedge()); }
            else if (c == '/') { get(); e = ex::quot(e, parse_wedge()); }
            else break;
        }
        return e;
    }
    ExprPtr parse_wedge() {
        ExprPtr e = parse_atom();
        while (peek() == '^') {
            get();
            e = ex::wedge(e, parse_atom());
        }
        return e;
    }
    ExprPtr parse_atom() {
        char c = peek();
        if (c == '(') {
            get();
            ExprPtr e = parse_sum();
            expect(')');
            return e;
        }
        if (c == '<') {
            get();
            ExprPtr e = parse_sum();
            expect('>');
            return ex::bracket(e);
        }
        if (std::isalnum(static_cast<unsigned char>(c))) {
            std::string tok;
            while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) tok.push_back(s[pos++]);
            bool all_digits = true;
            for (char ch : tok)
                if (!std::isdigit(static_cast<unsigned char>(ch))) all_digits = false;
            if (all_digits && tok.size() > 1) return ex::iconst(std::stol(tok));
            return ex::col(tok);
        }
        throw std::invalid_argument(std::string("parse_expr: unexpected character '") + c + "'");
    }
};

}  // namespace detail_expr

inline std::string print_expr(const ExprPtr& e) {
    std::ostringstream os;
    detail_expr::print_rec(e, os, 0);
    return os.str();
}

inline ExprPtr parse_expr(const std::string& text) {
    detail_expr::Parser p{text};
    ExprPtr e = p.parse_sum();
    p.skip_ws();
    if (p.pos != text.size()) throw std::invalid_argument("parse_expr: trailing input");
    return e;
}

}  // namespace plab
