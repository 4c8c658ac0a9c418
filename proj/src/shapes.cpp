#include "abcmin/shapes.hpp"

#include <sstream>

#include "shape_runs.hpp"

namespace abcmin {

const char* family_name(ShapeFamily f) {
    switch (f) {
        case ShapeFamily::Star: return "Star";
        case ShapeFamily::DoubleStar: return "DoubleStar";
        case ShapeFamily::RootOnly: return "RootOnly";
        case ShapeFamily::MixedOnly: return "MixedOnly";
        case ShapeFamily::RootAndMixed: return "RootAndMixed";
    }
    return "?";
}

namespace {

// Fields a family does not use must be zero so that shapes compare and
// deduplicate by value.
std::string unused_nonzero(const CandidateShape& s) {
    auto used_R = s.family == ShapeFamily::RootOnly || s.family == ShapeFamily::RootAndMixed;
    auto used_M = s.family == ShapeFamily::MixedOnly || s.family == ShapeFamily::RootAndMixed;
    auto used_k_R = s.family != ShapeFamily::MixedOnly;
    auto used_k_M = s.family == ShapeFamily::DoubleStar || used_M;
    if (!used_R && (s.d_R != 0 || s.s_R != 0)) return "d_R/s_R unused by this family must be 0";
    if (!used_M && (s.d_M != 0 || s.l != 0 || s.s_M != 0)) return "d_M/l/s_M unused by this family must be 0";
    if (!used_k_R && s.k_R != 0) return "k_R unused by this family must be 0";
    if (!used_k_M && s.k_M != 0) return "k_M unused by this family must be 0";
    if (s.family == ShapeFamily::Star && s.s_R != 0) return "s_R unused by Star must be 0";
    if (s.family == ShapeFamily::DoubleStar && (s.s_R != 0 || s.s_M != 0))
        return "s_R/s_M unused by DoubleStar must be 0";
    return {};
}

}  // namespace

std::string shape_violation(const CandidateShape& s) {
    if (auto v = unused_nonzero(s); !v.empty()) return v;
    switch (s.family) {
        case ShapeFamily::Star:
            if (s.k_R < 1) return "Star needs k_R >= 1";
            if (s.k_R == 2) return "Star with k_R = 2 has a degree-2 center";
            return {};
        case ShapeFamily::DoubleStar:
            if (s.k_M < 2) return "DoubleStar needs k_M >= 2 (one leaf leaves a degree-2 center)";
            if (s.k_R < s.k_M) return "DoubleStar needs k_R >= k_M";
            return {};
        case ShapeFamily::RootOnly:
            if (s.k_R < 5) return "RootOnly needs k_R >= 5";
            if (s.d_R < s.k_R + 1) return "RootOnly needs d_R >= k_R + 1";
            if (s.s_R < 0 || s.s_R > s.d_R - 1) return "RootOnly needs 0 <= s_R <= d_R - 1";
            return {};
        case ShapeFamily::MixedOnly:
            if (s.k_M < 5) return "MixedOnly needs k_M >= 5";
            if (s.d_M < s.k_M + 1) return "MixedOnly needs d_M >= k_M + 1";
            if (s.l < 1) return "MixedOnly needs l >= 1";
            if (s.l > s.d_M - 2) return "MixedOnly needs l <= d_M - 2";
            if (s.s_M < 0 || s.s_M > s.d_M - s.l - 1)
                return "MixedOnly needs 0 <= s_M <= d_M - l - 1";
            return {};
        case ShapeFamily::RootAndMixed:
            if (s.k_M < 5) return "RootAndMixed needs k_M >= 5";
            if (s.k_R < s.k_M) return "RootAndMixed needs k_R >= k_M";
            if (s.d_M < s.k_R + 1) return "RootAndMixed needs d_M >= k_R + 1";
            if (s.d_R < s.d_M) return "RootAndMixed needs d_R >= d_M";
            if (s.l < 1) return "RootAndMixed needs l >= 1";
            if (s.l > s.d_M - 2) return "RootAndMixed needs l <= d_M - 2";
            if (s.s_R < 0 || s.s_R > s.d_R - 2)
                return "RootAndMixed needs 0 <= s_R <= d_R - 2";
            if (s.s_M < 0 || s.s_M > s.d_M - s.l - 2)
                return "RootAndMixed needs 0 <= s_M <= d_M - l - 2";
            return {};
    }
    return "unknown family";
}

namespace {

void require_feasible(const CandidateShape& s) {
    if (auto v = shape_violation(s); !v.empty()) throw InfeasibleShapeError(v);
}

}  // namespace

long t_of_shape(const CandidateShape& s) {
    require_feasible(s);
    switch (s.family) {
        case ShapeFamily::Star:
            return s.k_R == 1 ? 2 : s.k_R;
        case ShapeFamily::DoubleStar:
            return s.k_R + s.k_M;
        case ShapeFamily::RootOnly:
            return s.d_R * s.k_R - s.s_R;
        case ShapeFamily::MixedOnly:
            return s.l + (s.d_M - s.l) * s.k_M - s.s_M;
        case ShapeFamily::RootAndMixed:
            return s.l + (s.d_R - 1) * s.k_R - s.s_R + (s.d_M - s.l - 1) * s.k_M - s.s_M;
    }
    throw InfeasibleShapeError("unknown family");
}

long order_of_shape(const CandidateShape& s) {
    long t = t_of_shape(s);
    switch (s.family) {
        case ShapeFamily::Star:
            return t == 2 ? 2 : t + 1;
        case ShapeFamily::DoubleStar:
            return t + 2;
        case ShapeFamily::RootOnly:
            return t + s.d_R + 1;
        case ShapeFamily::MixedOnly:
            return t + (s.d_M - s.l) + 1;
        case ShapeFamily::RootAndMixed:
            return t + (s.d_R - 1) + (s.d_M - s.l - 1) + 2;
    }
    throw InfeasibleShapeError("unknown family");
}

namespace detail {
namespace {

// The edge multiset of one hub's S-branches: n - s branches of order k and s
// of order k - 1 on a hub of degree hub_deg.
void push_branch_runs(std::vector<detail::DegreeRun>& runs, long hub_deg, long n,
                      long k, long s) {
    if (n - s > 0) {
        runs.push_back({1, k + 1, k * (n - s)});
        runs.push_back({k + 1, hub_deg, n - s});
    }
    if (s > 0) {
        runs.push_back({1, k, (k - 1) * s});
        runs.push_back({k, hub_deg, s});
    }
}

}  // namespace

std::vector<DegreeRun> shape_degree_runs(const CandidateShape& s) {
    std::vector<DegreeRun> runs;
    switch (s.family) {
        case ShapeFamily::Star:
            if (s.k_R == 1)
                runs.push_back({1, 1, 1});
            else
                runs.push_back({1, s.k_R, s.k_R});
            break;
        case ShapeFamily::DoubleStar:
            runs.push_back({1, s.k_R + 1, s.k_R});
            runs.push_back({1, s.k_M + 1, s.k_M});
            runs.push_back({s.k_R + 1, s.k_M + 1, 1});
            break;
        case ShapeFamily::RootOnly:
            push_branch_runs(runs, s.d_R, s.d_R, s.k_R, s.s_R);
            break;
        case ShapeFamily::MixedOnly:
            runs.push_back({1, s.d_M, s.l});
            push_branch_runs(runs, s.d_M, s.d_M - s.l, s.k_M, s.s_M);
            break;
        case ShapeFamily::RootAndMixed:
            runs.push_back({s.d_M, s.d_R, 1});
            runs.push_back({1, s.d_M, s.l});
            push_branch_runs(runs, s.d_R, s.d_R - 1, s.k_R, s.s_R);
            push_branch_runs(runs, s.d_M, s.d_M - s.l - 1, s.k_M, s.s_M);
            break;
    }
    return runs;
}

}  // namespace detail

double shape_abc(const CandidateShape& s) {
    require_feasible(s);
    return detail::abc_from_degree_runs(detail::shape_degree_runs(s));
}

namespace {

// Appends one S-branch group below `hub`: star vertices are numbered first
// (continuing `next`), each star's leaves follow after all stars of the tree
// have been placed, so the builder runs in two passes.
struct Builder {
    std::vector<std::pair<int, int>> edges;
    int next = 0;

    int fresh() { return next++; }

    void leaf_fan(int center, long count) {
        for (long i = 0; i < count; ++i) edges.emplace_back(center, fresh());
    }
};

}  // namespace

Tree build_extremal_tree(const CandidateShape& s) {
    require_feasible(s);
    Builder b;
    switch (s.family) {
        case ShapeFamily::Star: {
            int center = b.fresh();
            b.leaf_fan(center, s.k_R == 1 ? 1 : s.k_R);
            break;
        }
        case ShapeFamily::DoubleStar: {
            int big = b.fresh();
            int small = b.fresh();
            b.edges.emplace_back(big, small);
            b.leaf_fan(big, s.k_R);
            b.leaf_fan(small, s.k_M);
            break;
        }
        case ShapeFamily::RootOnly: {
            int hub = b.fresh();
            std::vector<std::pair<int, long>> stars;
            for (long i = 0; i < s.d_R; ++i) {
                int star = b.fresh();
                b.edges.emplace_back(hub, star);
                stars.emplace_back(star, i < s.d_R - s.s_R ? s.k_R : s.k_R - 1);
            }
            for (auto [star, k] : stars) b.leaf_fan(star, k);
            break;
        }
        case ShapeFamily::MixedOnly: {
            int hub = b.fresh();
            long n = s.d_M - s.l;
            std::vector<std::pair<int, long>> stars;
            for (long i = 0; i < n; ++i) {
                int star = b.fresh();
                b.edges.emplace_back(hub, star);
                stars.emplace_back(star, i < n - s.s_M ? s.k_M : s.k_M - 1);
            }
            b.leaf_fan(hub, s.l);
            for (auto [star, k] : stars) b.leaf_fan(star, k);
            break;
        }
        case ShapeFamily::RootAndMixed: {
            int root = b.fresh();
            int mixed = b.fresh();
            b.edges.emplace_back(root, mixed);
            std::vector<std::pair<int, long>> stars;
            long n_R = s.d_R - 1;
            for (long i = 0; i < n_R; ++i) {
                int star = b.fresh();
                b.edges.emplace_back(root, star);
                stars.emplace_back(star, i < n_R - s.s_R ? s.k_R : s.k_R - 1);
            }
            long n_M = s.d_M - s.l - 1;
            for (long i = 0; i < n_M; ++i) {
                int star = b.fresh();
                b.edges.emplace_back(mixed, star);
                stars.emplace_back(star, i < n_M - s.s_M ? s.k_M : s.k_M - 1);
            }
            b.leaf_fan(mixed, s.l);
            for (auto [star, k] : stars) b.leaf_fan(star, k);
            break;
        }
    }
    return Tree::from_edges(b.next, std::move(b.edges));
}

std::string shape_to_string(const CandidateShape& s) {
    std::ostringstream out;
    out << family_name(s.family);
    switch (s.family) {
        case ShapeFamily::Star:
            out << " k_R=" << s.k_R;
            break;
        case ShapeFamily::DoubleStar:
            out << " k_R=" << s.k_R << " k_M=" << s.k_M;
            break;
        case ShapeFamily::RootOnly:
            out << " d_R=" << s.d_R << " k_R=" << s.k_R << " s_R=" << s.s_R;
            break;
        case ShapeFamily::MixedOnly:
            out << " d_M=" << s.d_M << " l=" << s.l << " k_M=" << s.k_M
                << " s_M=" << s.s_M;
            break;
        case ShapeFamily::RootAndMixed:
            out << " d_R=" << s.d_R << " d_M=" << s.d_M << " l=" << s.l
                << " k_R=" << s.k_R << " s_R=" << s.s_R << " k_M=" << s.k_M
                << " s_M=" << s.s_M;
            break;
    }
    return out.str();
}

}  // namespace abcmin
