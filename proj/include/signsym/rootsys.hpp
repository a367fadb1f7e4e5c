#ifndef SIGNSYM_ROOTSYS_HPP
#define SIGNSYM_ROOTSYS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "signsym/linalg.hpp"
#include "signsym/perm.hpp"

namespace signsym::roots {

// Type tag plus rank, e.g. {A, 4} for the rank-4 system A4 (5 permuted axes).
struct Label {
    char family = '?'; // 'A'..'G'
    int rank = 0;

    std::string str() const { return std::string(1, family) + std::to_string(rank); }
    friend bool operator==(const Label& a, const Label& b) {
        return a.family == b.family && a.rank == b.rank;
    }
    friend bool operator<(const Label& a, const Label& b) {
        return a.family != b.family ? a.family < b.family : a.rank < b.rank;
    }
};

inline Label parse_label(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("bad root system label: " + s);
    char fam = s[0];
    int rank = std::stoi(s.substr(1));
    if (fam < 'A' || fam > 'G' || fam == 'H' ) throw std::invalid_argument("bad root system label: " + s);
    return Label{fam, rank};
}

// A root system in explicit coordinates. All coordinates are scaled by a
// global factor of 2 so that every entry is an integer (F4 and the E types
// have half-integer entries otherwise). Roots are kept sorted; orbit and
// cycle enumerations elsewhere rely on that order.
class RootSystem {
public:
    std::string name;            // "B4", "F4", "E7", "A4", "A1+A1", ...
    size_t ambient_dim = 0;
    long long scaled_by = 2;
    std::vector<IntVec> roots;   // sorted lexicographically
    std::vector<size_t> simple;  // indices into roots
    std::vector<int> component_of;       // per root, irreducible component id
    std::vector<std::string> component_name; // per component, type label
    std::vector<char> is_long;   // per root: 1 = long (or simply laced), 0 = short
    std::vector<IntVec> simple_coords;   // per root, coefficients over the simple basis

    size_t rank() const { return simple.size(); }
    size_t size() const { return roots.size(); }

    bool contains(const IntVec& v) const {
        return std::binary_search(roots.begin(), roots.end(), v);
    }
    size_t index_of(const IntVec& v) const {
        auto it = std::lower_bound(roots.begin(), roots.end(), v);
        if (it == roots.end() || *it != v) throw std::invalid_argument("vector is not a root");
        return static_cast<size_t>(it - roots.begin());
    }

    const IntVec& simple_root(size_t i) const { return roots[simple[i]]; }

    bool simply_laced_component(int comp) const {
        const std::string& n = component_name[static_cast<size_t>(comp)];
        return n[0] == 'A' || n[0] == 'D' || n[0] == 'E';
    }

    size_t num_components() const { return component_name.size(); }
};

namespace detail {

inline IntVec unit(size_t dim, size_t i, long long v) {
    IntVec e(dim, 0);
    e[i] = v;
    return e;
}

// expand a generating set to reflection closure and sort
inline void finalize_roots(RootSystem& rs) {
    std::sort(rs.roots.begin(), rs.roots.end());
    rs.roots.erase(std::unique(rs.roots.begin(), rs.roots.end()), rs.roots.end());
}

} // namespace detail

// Reflection in a root (or any nonzero vector), as an exact matrix on the
// ambient space: x -> x - 2<x,a>/<a,a> a.
inline QMatrix reflection_matrix(const IntVec& a) {
    size_t d = a.size();
    long long aa = dot(a, a);
    QMatrix m = QMatrix::identity(d);
    for (size_t j = 0; j < d; ++j) {
        // image of e_j: e_j - (2 a_j / <a,a>) a
        for (size_t i = 0; i < d; ++i) {
            m(i, j) -= Rational(2 * a[j], aa) * Rational(a[i]);
        }
    }
    return m;
}

namespace detail {

// positive system w.r.t. lexicographic order; simple = indecomposable positives
inline void compute_simple_system(RootSystem& rs) {
    std::vector<IntVec> positives;
    for (const auto& r : rs.roots) {
        // lex-positive: first nonzero coordinate positive
        for (auto c : r) {
            if (c > 0) { positives.push_back(r); break; }
            if (c < 0) break;
        }
    }
    std::set<IntVec> pos_set(positives.begin(), positives.end());
    rs.simple.clear();
    for (const auto& p : positives) {
        bool decomposable = false;
        for (const auto& q : positives) {
            if (q == p) continue;
            IntVec diff = p - q;
            if (!is_zero(diff) && pos_set.count(diff)) { decomposable = true; break; }
        }
        if (!decomposable) rs.simple.push_back(rs.index_of(p));
    }
}

inline void compute_components(RootSystem& rs) {
    // connected components of the non-orthogonality graph on roots
    size_t n = rs.roots.size();
    rs.component_of.assign(n, -1);
    int comp = 0;
    for (size_t i = 0; i < n; ++i) {
        if (rs.component_of[i] >= 0) continue;
        std::vector<size_t> stack{i};
        rs.component_of[i] = comp;
        while (!stack.empty()) {
            size_t j = stack.back();
            stack.pop_back();
            for (size_t k = 0; k < n; ++k) {
                if (rs.component_of[k] < 0 && dot(rs.roots[j], rs.roots[k]) != 0) {
                    rs.component_of[k] = comp;
                    stack.push_back(k);
                }
            }
        }
        ++comp;
    }
    rs.component_name.assign(static_cast<size_t>(comp), "");
}

// classify a single irreducible component by rank and length data
inline std::string classify_component(const RootSystem& rs, int comp) {
    std::vector<size_t> idx;
    for (size_t i = 0; i < rs.roots.size(); ++i)
        if (rs.component_of[i] == comp) idx.push_back(i);
    // rank = dimension of the span
    QMatrix m(idx.size(), rs.ambient_dim);
    for (size_t r = 0; r < idx.size(); ++r)
        for (size_t c = 0; c < rs.ambient_dim; ++c) m(r, c) = rs.roots[idx[r]][c];
    size_t rank = rref(m);
    std::set<long long> norms;
    for (size_t i : idx) norms.insert(dot(rs.roots[i], rs.roots[i]));
    size_t count = idx.size();
    char fam;
    if (norms.size() == 1) {
        // simply laced: A (n^2+n roots), D (2n^2-2n), E
        if (count == rank * rank + rank) fam = 'A';
        else if (rank == 6 && count == 72) fam = 'E';
        else if (rank == 7 && count == 126) fam = 'E';
        else if (rank == 8 && count == 240) fam = 'E';
        else if (count == 2 * rank * rank - 2 * rank) fam = 'D';
        else throw std::logic_error("unrecognized simply laced component");
    } else {
        long long lo = *norms.begin(), hi = *norms.rbegin();
        if (rank == 2 && hi == 3 * lo) fam = 'G';
        else if (rank == 4 && count == 48) fam = 'F';
        else {
            // B: 2n^2 roots, short = +-e_i (2n of them); C: long = +-2e_i
            size_t n_short = 0;
            for (size_t i : idx)
                if (dot(rs.roots[i], rs.roots[i]) == lo) ++n_short;
            fam = (n_short == 2 * rank) ? 'B' : 'C';
        }
    }
    return std::string(1, fam) + std::to_string(rank);
}

inline void compute_lengths(RootSystem& rs) {
    rs.is_long.assign(rs.roots.size(), 1);
    for (size_t c = 0; c < rs.num_components(); ++c) {
        std::set<long long> norms;
        for (size_t i = 0; i < rs.roots.size(); ++i)
            if (rs.component_of[i] == static_cast<int>(c))
                norms.insert(dot(rs.roots[i], rs.roots[i]));
        if (norms.size() == 1) continue; // simply laced: every root counts as long
        long long lo = *norms.begin();
        for (size_t i = 0; i < rs.roots.size(); ++i)
            if (rs.component_of[i] == static_cast<int>(c) &&
                dot(rs.roots[i], rs.roots[i]) == lo)
                rs.is_long[i] = 0;
    }
}

inline void compute_simple_coords(RootSystem& rs) {
    // x = (G^-1) S^T r where S has the simple roots as rows, G = S S^T
    size_t k = rs.rank();
    QMatrix g(k, k);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
            g(i, j) = dot(rs.simple_root(i), rs.simple_root(j));
    // invert g by rref on [g | I]
    QMatrix aug(k, 2 * k);
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) aug(i, j) = g(i, j);
        aug(i, k + i) = 1;
    }
    if (rref(aug) != k) throw std::logic_error("simple roots not independent");
    QMatrix ginv(k, k);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) ginv(i, j) = aug(i, k + j);
    rs.simple_coords.clear();
    rs.simple_coords.reserve(rs.roots.size());
    for (const auto& r : rs.roots) {
        std::vector<Rational> pair_vec(k);
        for (size_t i = 0; i < k; ++i) pair_vec[i] = dot(rs.simple_root(i), r);
        std::vector<Rational> x = ginv.apply(pair_vec);
        IntVec xi(k);
        for (size_t i = 0; i < k; ++i) xi[i] = x[i].as_integer();
        rs.simple_coords.push_back(std::move(xi));
    }
}

inline void finalize(RootSystem& rs) {
    finalize_roots(rs);
    compute_simple_system(rs);
    compute_components(rs);
    for (size_t c = 0; c < rs.num_components(); ++c)
        rs.component_name[c] = classify_component(rs, static_cast<int>(c));
    compute_lengths(rs);
    compute_simple_coords(rs);
    // sanity: closed under negation and reflection
    for (const auto& r : rs.roots)
        if (!rs.contains(-r)) throw std::logic_error("root set not negation closed");
    for (size_t s : rs.simple) {
        QMatrix refl = reflection_matrix(rs.roots[s]);
        for (const auto& r : rs.roots)
            if (!rs.contains(refl.apply_int(r)))
                throw std::logic_error("root set not reflection closed");
    }
}

// roots of E8 in the coordinates fixed by the D8 simple roots below:
// the D8 vectors +-e_i +- e_j together with the half-vector class of
// beta = (e_0 - e_1 - ... - e_6 + e_7)/2 under the D8 Weyl action, i.e.
// all (+-1/2)^8 with an even number of minus signs. Scaled by 2.
inline std::vector<IntVec> e8_roots() {
    std::vector<IntVec> out;
    for (size_t i = 0; i < 8; ++i)
        for (size_t j = i + 1; j < 8; ++j)
            for (int si = -1; si <= 1; si += 2)
                for (int sj = -1; sj <= 1; sj += 2) {
                    IntVec v(8, 0);
                    v[i] = 2 * si;
                    v[j] = 2 * sj;
                    out.push_back(v);
                }
    for (int mask = 0; mask < 256; ++mask) {
        int minus = __builtin_popcount(static_cast<unsigned>(mask));
        if (minus % 2 != 0) continue;
        IntVec v(8, 0);
        for (size_t i = 0; i < 8; ++i) v[i] = (mask >> i) & 1 ? -1 : 1;
        out.push_back(v);
    }
    return out;
}

} // namespace detail

// Construction of the named systems, in the coordinates used throughout:
// 0-based axes, A/B/C/D realized on n permuted axes, E8 built over D8,
// E7 and E6 cut out of E8 as orthogonal complements of the first one or
// two D8 simple roots, F4 built over B4, G2 realized in the sum-zero
// plane of 3 axes. Everything scaled by 2.
inline RootSystem build(const Label& label) {
    RootSystem rs;
    rs.name = label.str();
    char fam = label.family;
    int n = label.rank;
    const long long S = 2; // global scale

    auto add = [&rs](IntVec v) { rs.roots.push_back(std::move(v)); };

    if (fam == 'A') {
        if (n < 1) throw std::invalid_argument("A_n requires n >= 1");
        size_t d = static_cast<size_t>(n) + 1;
        rs.ambient_dim = d;
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j)
                if (i != j) {
                    IntVec v(d, 0);
                    v[i] = S;
                    v[j] = -S;
                    add(std::move(v));
                }
    } else if (fam == 'B' || fam == 'C' || fam == 'D') {
        int min_rank = fam == 'D' ? 3 : 2;
        if (n < min_rank) throw std::invalid_argument("rank too small for type");
        size_t d = static_cast<size_t>(n);
        rs.ambient_dim = d;
        for (size_t i = 0; i < d; ++i)
            for (size_t j = i + 1; j < d; ++j)
                for (int si = -1; si <= 1; si += 2)
                    for (int sj = -1; sj <= 1; sj += 2) {
                        IntVec v(d, 0);
                        v[i] = S * si;
                        v[j] = S * sj;
                        add(std::move(v));
                    }
        if (fam == 'B')
            for (size_t i = 0; i < d; ++i)
                for (int s = -1; s <= 1; s += 2) add(detail::unit(d, i, S * s));
        if (fam == 'C')
            for (size_t i = 0; i < d; ++i)
                for (int s = -1; s <= 1; s += 2) add(detail::unit(d, i, 2 * S * s));
    } else if (fam == 'F') {
        if (n != 4) throw std::invalid_argument("F requires rank 4");
        rs.ambient_dim = 4;
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = i + 1; j < 4; ++j)
                for (int si = -1; si <= 1; si += 2)
                    for (int sj = -1; sj <= 1; sj += 2) {
                        IntVec v(4, 0);
                        v[i] = S * si;
                        v[j] = S * sj;
                        add(std::move(v));
                    }
        for (size_t i = 0; i < 4; ++i)
            for (int s = -1; s <= 1; s += 2) add(detail::unit(4, i, S * s));
        for (int mask = 0; mask < 16; ++mask) {
            IntVec v(4, 0);
            for (size_t i = 0; i < 4; ++i) v[i] = (mask >> i) & 1 ? -1 : 1;
            add(std::move(v));
        }
    } else if (fam == 'G') {
        if (n != 2) throw std::invalid_argument("G requires rank 2");
        rs.ambient_dim = 3;
        // short: e_i - e_j; long: +-(2e_i - e_j - e_k)
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) {
                if (i == j) continue;
                IntVec v(3, 0);
                v[i] = S;
                v[j] = -S;
                add(std::move(v));
            }
        for (size_t i = 0; i < 3; ++i)
            for (int s = -1; s <= 1; s += 2) {
                IntVec v(3, -S * s);
                v[i] = 2 * S * s;
                add(std::move(v));
            }
    } else if (fam == 'E') {
        if (n < 6 || n > 8) throw std::invalid_argument("E requires rank 6, 7 or 8");
        rs.ambient_dim = 8;
        auto all = detail::e8_roots();
        if (n == 8) {
            rs.roots = std::move(all);
        } else {
            // alpha1 = -(e6 + e7), alpha2 = e6 - e5 (scaled)
            IntVec a1(8, 0), a2(8, 0);
            a1[6] = -2; a1[7] = -2;
            a2[6] = 2;  a2[5] = -2;
            for (auto& v : all) {
                if (dot(v, a1) != 0) continue;
                if (n == 6 && dot(v, a2) != 0) continue;
                add(std::move(v));
            }
        }
    } else {
        throw std::invalid_argument("unsupported family");
    }

    detail::finalize(rs);
    return rs;
}

inline RootSystem build(const std::string& label) { return build(parse_label(label)); }

// An orthogonal union of systems, for reducible computations. Components are
// placed on consecutive blocks of axes. Name is e.g. "A1+A1".
inline RootSystem build_union(const std::vector<Label>& parts) {
    std::vector<RootSystem> built;
    size_t dim = 0;
    for (const auto& p : parts) {
        built.push_back(build(p));
        dim += built.back().ambient_dim;
    }
    RootSystem rs;
    rs.ambient_dim = dim;
    std::string nm;
    size_t off = 0;
    for (const auto& b : built) {
        if (!nm.empty()) nm += "+";
        nm += b.name;
        for (const auto& r : b.roots) {
            IntVec v(dim, 0);
            std::copy(r.begin(), r.end(), v.begin() + static_cast<long>(off));
            rs.roots.push_back(std::move(v));
        }
        off += b.ambient_dim;
    }
    rs.name = nm;
    detail::finalize(rs);
    return rs;
}

// A root system built from an explicit subset of vectors (must be closed
// under its own reflections); used for Levi subsystems and for E7/E6 cut
// from E8 with a descriptive name.
inline RootSystem subsystem(std::vector<IntVec> vecs, const std::string& name) {
    RootSystem rs;
    if (vecs.empty()) throw std::invalid_argument("subsystem: empty root set");
    rs.ambient_dim = vecs[0].size();
    rs.name = name;
    rs.roots = std::move(vecs);
    detail::finalize(rs);
    return rs;
}

// Does the matrix permute the root set?
inline bool is_automorphism(const RootSystem& rs, const QMatrix& m) {
    try {
        for (const auto& r : rs.roots)
            if (!rs.contains(m.apply_int(r))) return false;
    } catch (const std::logic_error&) {
        return false; // non-integral image
    }
    return true;
}

// a = w . tau with w in the Weyl group (given as a reduced word in simple
// reflections) and tau a permutation of the simple system. Found by the
// chamber walk: pull a generic dominant vector back into the fundamental
// chamber, applying simple reflections for descents, lowest index first.
struct Decomposition {
    std::vector<size_t> word;          // w = s_{word[0]} ... s_{word.back()}
    std::vector<size_t> diagram_perm;  // tau as a permutation of simple indices
    size_t length() const { return word.size(); }
};

inline Decomposition decompose(const RootSystem& rs, const QMatrix& m) {
    if (!is_automorphism(rs, m))
        throw std::invalid_argument("decompose: matrix does not stabilize the root set");
    // sum of lex-positive roots: a regular dominant vector for our chamber
    IntVec v0(rs.ambient_dim, 0);
    for (const auto& r : rs.roots) {
        for (auto c : r) {
            if (c > 0) { v0 = v0 + r; break; }
            if (c < 0) break;
        }
    }
    Decomposition d;
    IntVec x = m.apply_int(v0);
    for (;;) {
        bool descent = false;
        for (size_t i = 0; i < rs.rank(); ++i) {
            const IntVec& a = rs.simple_root(i);
            long long p = dot(x, a);
            if (p < 0) {
                // x <- s_a(x)
                long long aa = dot(a, a);
                long long c2 = 2 * p;
                if (c2 % aa != 0) throw std::logic_error("decompose: non-integral reflection step");
                long long c = c2 / aa;
                for (size_t k = 0; k < rs.ambient_dim; ++k) x[k] -= c * a[k];
                d.word.push_back(i);
                descent = true;
                break;
            }
        }
        if (!descent) break;
    }
    if (x != v0) throw std::logic_error("decompose: walk did not reach the base chamber");
    // residual simple-root permutation: tau = s_{i_K} ... s_{i_1} m
    QMatrix tau = m;
    for (size_t i : d.word) tau = reflection_matrix(rs.simple_root(i)) * tau;
    d.diagram_perm.resize(rs.rank());
    for (size_t j = 0; j < rs.rank(); ++j) {
        IntVec img = tau.apply_int(rs.simple_root(j));
        bool found = false;
        for (size_t i = 0; i < rs.rank(); ++i)
            if (rs.simple_root(i) == img) {
                d.diagram_perm[j] = i;
                found = true;
                break;
            }
        if (!found) throw std::logic_error("decompose: residual part does not permute the simple system");
    }
    return d;
}

// sgn_R: -1 at every reflection, trivial on simple-system stabilizers.
inline Sign sgn_root(const RootSystem& rs, const QMatrix& m) {
    return decompose(rs, m).length() % 2 == 0 ? 1 : -1;
}

// The long/short refinements. epsilon_{a,long} = -1 iff the component of a
// is simply laced or a is long; epsilon_{a,short} = -epsilon_{a,long}.
// Diagram automorphisms contribute +1.
inline Sign sgn_root_starred(const RootSystem& rs, const QMatrix& m, bool long_flavor) {
    Decomposition d = decompose(rs, m);
    Sign s = 1;
    for (size_t i : d.word) {
        size_t root_idx = rs.simple[i];
        bool sl = rs.simply_laced_component(rs.component_of[root_idx]);
        Sign eps_long = (sl || rs.is_long[root_idx]) ? -1 : 1;
        Sign eps = long_flavor ? eps_long : -eps_long;
        s *= eps;
    }
    return s;
}

inline Sign sgn_long(const RootSystem& rs, const QMatrix& m) { return sgn_root_starred(rs, m, true); }
inline Sign sgn_short(const RootSystem& rs, const QMatrix& m) { return sgn_root_starred(rs, m, false); }

// Dual Coxeter number of an irreducible system, by the standard chart.
inline long long dual_coxeter(const std::string& comp_name) {
    char fam = comp_name[0];
    long long r = std::stoll(comp_name.substr(1));
    switch (fam) {
        case 'A': return r + 1;         // A_{n-1} -> n
        case 'B': return 2 * r - 1;
        case 'C': return r + 1;
        case 'D': return 2 * (r - 1);
        case 'G': return 4;
        case 'F': return 9;
        case 'E':
            if (r == 6) return 12;
            if (r == 7) return 18;
            if (r == 8) return 30;
            break;
    }
    throw std::invalid_argument("dual_coxeter: unsupported label " + comp_name);
}

// Dual Coxeter number of the dual system (B and C swap; others self-dual).
inline long long dual_coxeter_of_dual(const std::string& comp_name) {
    char fam = comp_name[0];
    std::string dual_name = comp_name;
    if (fam == 'B') dual_name[0] = 'C';
    else if (fam == 'C') dual_name[0] = 'B';
    return dual_coxeter(dual_name);
}

} // namespace signsym::roots

#endif
