#include "hyp/hyperbolicity.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "hyp/error.hpp"
#include "hyp/realroots.hpp"
#include "hyp/rng.hpp"

namespace hyp {

std::string verdict_kind_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::CertifiedNot: return "certified_not_hyperbolic";
        case VerdictKind::ProbablyHyperbolic: return "probably_hyperbolic";
        case VerdictKind::CertifiedHyperbolic: return "certified_hyperbolic";
    }
    return "?";
}

namespace {

void validate_direction(const MultiPoly& h, const PointQ& e) {
    if (static_cast<int>(e.size()) != h.nvars())
        throw DimensionMismatch("direction dimension does not match nvars");
    homogeneous_degree(h);
    if (evaluate(h, e) == 0)
        throw NotApplicable("h(e) = 0: hyperbolicity is undefined for directions on the hypersurface");
}

// Witness soundness is part of the verdict contract; re-verify before returning.
HypVerdict certified_not(const MultiPoly& h, const PointQ& e, PointQ witness, std::string notes) {
    if (is_real_rooted(restrict_line(h, e, witness)))
        throw InternalInconsistency("claimed witness restriction is real-rooted");
    HypVerdict v;
    v.kind = VerdictKind::CertifiedNot;
    v.witness = std::move(witness);
    v.notes = std::move(notes);
    return v;
}

PointQ sample_int_vector(CounterRng& rng, int n, long lo, long hi) {
    PointQ v(n);
    for (int i = 0; i < n; ++i) v[i] = Rational(rng.uniform_int(lo, hi));
    return v;
}

// Symmetric matrix of a quadratic form, A[i][j] = coeff(x_i x_j)/2 off the
// diagonal.
std::vector<PointQ> quadratic_matrix(const MultiPoly& h) {
    const int n = h.nvars();
    std::vector<PointQ> a(n, PointQ(n, Rational(0)));
    for (const auto& [e, c] : h.terms()) {
        int i = -1, j = -1;
        for (int k = 0; k < n; ++k) {
            if (e[k] == 2) { i = j = k; break; }
            if (e[k] == 1) { (i < 0 ? i : j) = k; }
        }
        if (i == j) {
            a[i][i] = c;
        } else {
            a[i][j] = c / 2;
            a[j][i] = c / 2;
        }
    }
    return a;
}

struct Diagonalization {
    std::vector<Rational> diag;    // entries of P^T A P
    std::vector<PointQ> basis;     // columns of P: q(basis[i]) = diag[i], B(basis[i],basis[j]) = 0
};

// Symmetric Gaussian congruence with the usual zero-pivot repair.
Diagonalization congruence_diagonalize(std::vector<PointQ> a) {
    const int n = static_cast<int>(a.size());
    std::vector<PointQ> p(n, PointQ(n, Rational(0)));
    for (int i = 0; i < n; ++i) p[i][i] = 1; // columns of identity

    auto add_col = [&](int dst, int src, const Rational& f) {
        // col_dst += f * col_src, applied to both A (rows+cols) and P (cols)
        for (int r = 0; r < n; ++r) a[r][dst] += f * a[r][src];
        for (int cidx = 0; cidx < n; ++cidx) a[dst][cidx] += f * a[src][cidx];
        for (int r = 0; r < n; ++r) p[r][dst] += f * p[r][src];
    };
    auto swap_cols = [&](int i, int j) {
        for (int r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
        for (int cidx = 0; cidx < n; ++cidx) std::swap(a[i][cidx], a[j][cidx]);
        for (int r = 0; r < n; ++r) std::swap(p[r][i], p[r][j]);
    };

    for (int k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            int nz_diag = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][i] != 0) { nz_diag = i; break; }
            if (nz_diag >= 0) {
                swap_cols(k, nz_diag);
            } else {
                int nz_off = -1;
                for (int i = k + 1; i < n; ++i)
                    if (a[k][i] != 0) { nz_off = i; break; }
                if (nz_off < 0) continue; // row/col already zero
                add_col(k, nz_off, 1);    // makes a[k][k] = 2*a[k][nz_off] != 0
            }
        }
        for (int i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            add_col(i, k, -a[i][k] / a[k][k]);
        }
    }
    Diagonalization d;
    d.diag.resize(n);
    d.basis.resize(n);
    for (int i = 0; i < n; ++i) {
        d.diag[i] = a[i][i];
        d.basis[i] = PointQ(n);
        for (int r = 0; r < n; ++r) d.basis[i][r] = p[r][i];
    }
    return d;
}

// Solves M z = rhs for invertible M given by columns.
PointQ solve_columns(const std::vector<PointQ>& cols, const PointQ& rhs) {
    const int n = static_cast<int>(rhs.size());
    std::vector<PointQ> m(n, PointQ(n + 1));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) m[r][c] = cols[c][r];
        m[r][n] = rhs[r];
    }
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int r = k; r < n; ++r)
            if (m[r][k] != 0) { piv = r; break; }
        if (piv < 0) throw InternalInconsistency("singular basis in solve_columns");
        std::swap(m[k], m[piv]);
        for (int r = 0; r < n; ++r) {
            if (r == k || m[r][k] == 0) continue;
            Rational f = m[r][k] / m[k][k];
            for (int c = k; c <= n; ++c) m[r][c] -= f * m[k][c];
        }
    }
    PointQ z(n);
    for (int r = 0; r < n; ++r) z[r] = m[r][n] / m[r][r];
    return z;
}

} // namespace

HypVerdict check_hyperbolic_exact_bivariate(const MultiPoly& h, const PointQ& e) {
    validate_direction(h, e);
    if (h.nvars() != 2) throw NotApplicable("exact bivariate test requires nvars = 2");
    PointQ w{Rational(1), Rational(0)};
    if (collinear(e, w)) w = PointQ{Rational(0), Rational(1)};
    if (is_real_rooted(restrict_line(h, e, w))) {
        HypVerdict v;
        v.kind = VerdictKind::CertifiedHyperbolic;
        v.method = "bivariate_reduction";
        return v;
    }
    return certified_not(h, e, w, "single-line reduction for binary forms");
}

HypVerdict check_hyperbolic_quadratic(const MultiPoly& h, const PointQ& e) {
    validate_direction(h, e);
    if (homogeneous_degree(h) != 2) throw NotApplicable("quadratic test requires degree 2");
    const int n = h.nvars();

    Diagonalization d = congruence_diagonalize(quadratic_matrix(h));
    const int flip = sign_of(evaluate(h, e)) < 0 ? -1 : 1;

    std::vector<int> pos; // indices with positive normalized diagonal
    for (int i = 0; i < n; ++i)
        if (flip * sign_of(d.diag[i]) > 0) pos.push_back(i);

    if (pos.size() == 1) {
        HypVerdict v;
        v.kind = VerdictKind::CertifiedHyperbolic;
        v.method = "quadratic_signature";
        return v;
    }
    // Two independent positive directions exist: build w with B(e,w) = 0 and
    // q(w) of the same sign as q(e); the restriction along w has no real roots.
    PointQ ze = solve_columns(d.basis, e);
    const int i0 = pos[0], i1 = pos[1];
    Rational c0 = d.diag[i0] * ze[i0];
    Rational c1 = d.diag[i1] * ze[i1];
    PointQ zeta(n, Rational(0));
    if (c0 == 0 && c1 == 0) {
        zeta[i0] = 1;
    } else {
        zeta[i0] = c1;
        zeta[i1] = -c0;
    }
    PointQ w(n, Rational(0));
    for (int i = 0; i < n; ++i)
        if (zeta[i] != 0) w = add(w, scale(zeta[i], d.basis[i]));
    return certified_not(h, e, w, "positive-inertia witness from congruence diagonalization");
}

HypVerdict check_hyperbolic(const MultiPoly& h, const PointQ& e, int trials, std::uint64_t seed) {
    validate_direction(h, e);
    if (trials < 1) throw Error("bad_trials", "trials must be >= 1");
    if (h.nvars() == 2) return check_hyperbolic_exact_bivariate(h, e);
    if (homogeneous_degree(h) == 2) return check_hyperbolic_quadratic(h, e);

    const int n = h.nvars();
    for (int k = 0; k < trials; ++k) {
        CounterRng rng(seed, static_cast<std::uint64_t>(k));
        PointQ v;
        do {
            v = sample_int_vector(rng, n, -10, 10);
        } while (is_zero(v) || collinear(v, e));
        if (!is_real_rooted(restrict_line(h, e, v)))
            return certified_not(h, e, v, "sampled line with non-real roots");
    }
    HypVerdict verdict;
    verdict.kind = VerdictKind::ProbablyHyperbolic;
    verdict.trials = trials;
    return verdict;
}

bool in_cone(const MultiPoly& h, const PointQ& e, const PointQ& x) {
    validate_direction(h, e);
    if (static_cast<int>(x.size()) != h.nvars())
        throw DimensionMismatch("in_cone: point dimension does not match nvars");
    UniPoly u = restrict_line(h, e, negate(x));
    try {
        return all_roots_positive(u);
    } catch (const Error& err) {
        if (err.code() == "not_real_rooted")
            throw InvalidDirection("in_cone: restriction through x is not real-rooted, "
                                   "so e is not a hyperbolicity direction",
                                   point_to_string(negate(x)));
        throw;
    }
}

bool same_component(const MultiPoly& h, const PointQ& e1, const PointQ& e2) {
    bool fwd = in_cone(h, e1, e2);
    bool bwd = in_cone(h, e2, e1);
    if (fwd != bwd)
        throw InternalInconsistency("cone membership is not symmetric for " +
                                    point_to_string(e1) + " and " + point_to_string(e2));
    return fwd;
}

int ComponentReport::component_of(const MultiPoly& h, const PointQ& x) const {
    for (std::size_t i = 0; i < components.size(); ++i)
        if (in_cone(h, components[i].representative, x)) return static_cast<int>(i);
    return -1;
}

namespace {

// The randomized filter can accept a direction close to a cone boundary that
// is not actually hyperbolic. Clustering is built to expose such samples:
// membership probes run only along lines through component representatives,
// so a thrown InvalidDirection certifies the *representative* junk, and
// fresh representatives get re-vetted at a higher trial count before they
// may found a component. Certified-junk classes are purged everywhere and
// their former members reconsidered.
class Clusterer {
public:
    Clusterer(const MultiPoly& h, int trials, std::uint64_t seed)
        : h_(h), trials_(trials), seed_(seed) {}

    struct Comp {
        int rep_class = -1;
        int rep_sign_ = 1;
        std::vector<int> member_classes; // parallel arrays; first entry is the rep
        std::vector<int> member_signs;   // +1 for the class point, -1 for its negation
    };

    void run(const std::vector<PointQ>& class_reps, const std::vector<char>& accepted) {
        classes_ = &class_reps;
        junk_.assign(class_reps.size(), false);
        std::deque<std::pair<int, int>> work; // (class, sign)
        for (std::size_t c = 0; c < class_reps.size(); ++c) {
            if (!accepted[c]) continue;
            work.emplace_back(static_cast<int>(c), +1);
            work.emplace_back(static_cast<int>(c), -1);
        }
        while (!work.empty()) {
            auto [cls, sign] = work.front();
            work.pop_front();
            if (junk_[cls]) continue;
            place(cls, sign, work);
        }
        // pairing; a failure certifies a junk representative, purge and retry
        for (;;) {
            if (try_pairing(work)) break;
            while (!work.empty()) {
                auto [cls, sign] = work.front();
                work.pop_front();
                if (junk_[cls]) continue;
                place(cls, sign, work);
            }
        }
    }

    const std::vector<Comp>& comps() const { return comps_; }

    PointQ point_of(int cls, int sign) const {
        return sign > 0 ? (*classes_)[cls] : negate((*classes_)[cls]);
    }

    std::vector<int> pair_map_;

private:
    // 1 member, 0 not a member, -1 the representative is certified junk
    int probe(const PointQ& rep, const PointQ& x) {
        try {
            return in_cone(h_, rep, x) ? 1 : 0;
        } catch (const InvalidDirection&) {
            return -1;
        }
    }

    void purge_class(int cls, std::deque<std::pair<int, int>>& work) {
        junk_[cls] = true;
        std::vector<Comp> kept;
        for (auto& comp : comps_) {
            if (comp.rep_class == cls) {
                for (std::size_t m = 0; m < comp.member_classes.size(); ++m)
                    if (comp.member_classes[m] != cls)
                        work.emplace_back(comp.member_classes[m], comp.member_signs[m]);
                continue;
            }
            Comp c2 = comp;
            c2.member_classes.clear();
            c2.member_signs.clear();
            for (std::size_t m = 0; m < comp.member_classes.size(); ++m) {
                if (comp.member_classes[m] == cls) continue;
                c2.member_classes.push_back(comp.member_classes[m]);
                c2.member_signs.push_back(comp.member_signs[m]);
            }
            kept.push_back(std::move(c2));
        }
        comps_ = std::move(kept);
    }

    void place(int cls, int sign, std::deque<std::pair<int, int>>& work) {
        PointQ x = point_of(cls, sign);
        for (std::size_t c = 0; c < comps_.size(); ++c) {
            PointQ rep = point_of(comps_[c].rep_class, comps_[c].rep_sign_);
            int r = probe(rep, x);
            if (r == -1) {
                int bad = comps_[c].rep_class;
                purge_class(bad, work);
                work.emplace_back(cls, sign); // reconsider after the purge
                return;
            }
            if (r == 1) {
                comps_[c].member_classes.push_back(cls);
                comps_[c].member_signs.push_back(sign);
                return;
            }
        }
        // founds a new component: re-vet at a higher trial count first
        std::uint64_t vet_seed = seed_ ^ (0xda7a5eedULL + 0x9e3779b97f4a7c15ULL * (cls + 1));
        HypVerdict v = check_hyperbolic(h_, x, 4 * trials_, vet_seed);
        if (!v.accepted_hyperbolic()) {
            purge_class(cls, work);
            return;
        }
        Comp c;
        c.rep_class = cls;
        c.rep_sign_ = sign;
        c.member_classes.push_back(cls);
        c.member_signs.push_back(sign);
        comps_.push_back(std::move(c));
    }

    bool try_pairing(std::deque<std::pair<int, int>>& work) {
        pair_map_.assign(comps_.size(), -1);
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            PointQ neg = negate(point_of(comps_[i].rep_class, comps_[i].rep_sign_));
            for (std::size_t j = 0; j < comps_.size(); ++j) {
                int r = probe(point_of(comps_[j].rep_class, comps_[j].rep_sign_), neg);
                if (r == -1) {
                    purge_class(comps_[j].rep_class, work);
                    return false;
                }
                if (r == 1) {
                    pair_map_[i] = static_cast<int>(j);
                    break;
                }
            }
            if (pair_map_[i] < 0) {
                // the negation of a genuine cone is always sampled; failure
                // certifies the representative junk at a higher trial count
                std::uint64_t vet_seed = seed_ ^ (0xfeedf00dULL * (i + 1));
                HypVerdict v = check_hyperbolic(
                    h_, point_of(comps_[i].rep_class, comps_[i].rep_sign_), 8 * trials_, vet_seed);
                if (!v.accepted_hyperbolic()) {
                    purge_class(comps_[i].rep_class, work);
                    return false;
                }
                throw InternalInconsistency(
                    "negated component not discovered despite signed sampling");
            }
        }
        return true;
    }

    const MultiPoly& h_;
    int trials_;
    std::uint64_t seed_;
    const std::vector<PointQ>* classes_ = nullptr;
    std::vector<bool> junk_;
    std::vector<Comp> comps_;
};

} // namespace

ComponentReport count_components(const MultiPoly& h, int sphere_samples, std::uint64_t seed,
                                 int trials_per_sample) {
    const int n = h.nvars();
    if (n < 2) throw NotApplicable("component counting requires nvars >= 2");
    homogeneous_degree(h);
    if (sphere_samples < 2) throw Error("bad_samples", "sphere_samples must be >= 2");

    ComponentReport report;

    // distinct primitive direction classes; each contributes both signs
    std::set<PointQ> seen;
    std::vector<PointQ> class_reps;
    std::uint64_t stream = 0;
    const int target_classes = (sphere_samples + 1) / 2;
    const std::uint64_t max_attempts = 256ULL * static_cast<std::uint64_t>(sphere_samples);
    while (static_cast<int>(class_reps.size()) < target_classes && stream < max_attempts) {
        CounterRng rng(seed, stream++);
        PointQ w = sample_int_vector(rng, n, -10, 10);
        if (is_zero(w)) continue;
        w = canonical_direction(w);
        if (!seen.insert(w).second) continue;
        class_reps.push_back(w);
    }
    report.sample_count = 2 * static_cast<int>(class_reps.size());

    // randomized filter, one verdict per sign class (hyperbolicity is
    // invariant under negation, and a witness certifies both signs)
    std::vector<char> accepted(class_reps.size(), 0);
    bool any = false;
    for (std::size_t c = 0; c < class_reps.size(); ++c) {
        if (evaluate(h, class_reps[c]) == 0) continue;
        std::uint64_t sample_seed = seed ^ (0x9e3779b97f4a7c15ULL * (c + 1));
        HypVerdict v = check_hyperbolic(h, class_reps[c], trials_per_sample, sample_seed);
        if (v.accepted_hyperbolic()) {
            accepted[c] = 1;
            any = true;
        }
    }
    if (!any) {
        report.status = "not_found_at_this_resolution";
        return report;
    }

    Clusterer clusterer(h, trials_per_sample, seed);
    clusterer.run(class_reps, accepted);

    // flatten to the report structures, canonically ordered
    struct Keyed {
        PointQ rep;
        std::vector<PointQ> members;
        int original_index;
    };
    std::vector<Keyed> keyed;
    for (std::size_t c = 0; c < clusterer.comps().size(); ++c) {
        const auto& comp = clusterer.comps()[c];
        Keyed k;
        k.rep = clusterer.point_of(comp.rep_class, comp.rep_sign_);
        for (std::size_t m = 0; m < comp.member_classes.size(); ++m)
            k.members.push_back(clusterer.point_of(comp.member_classes[m], comp.member_signs[m]));
        k.original_index = static_cast<int>(c);
        keyed.push_back(std::move(k));
    }
    std::vector<int> order(keyed.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return keyed[a].rep < keyed[b].rep; });
    std::vector<int> rank_of(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) rank_of[order[i]] = static_cast<int>(i);

    for (int idx : order) {
        Component comp;
        comp.representative = keyed[idx].rep;
        for (const auto& m : keyed[idx].members) {
            comp.members.push_back(static_cast<int>(report.hyperbolic_samples.size()));
            report.hyperbolic_samples.push_back(m);
        }
        report.components.push_back(std::move(comp));
    }
    report.pair_map.assign(order.size(), -1);
    for (std::size_t i = 0; i < order.size(); ++i)
        report.pair_map[rank_of[static_cast<int>(i)]] = rank_of[clusterer.pair_map_[i]];
    report.pairs = static_cast<int>(report.components.size()) / 2;
    return report;
}

} // namespace hyp
