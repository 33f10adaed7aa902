#include "wps/classify.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace wps {

namespace {

// Necessary condition for quasi-smoothness at the vertex P_i.
template <std::size_t N, std::size_t C>
bool vertex_ok(const std::array<int, N>& a, const std::array<int, C>& d, std::size_t i)
{
    const int m = a[i];
    if (m == 1) return true;
    unsigned ext[C] = {};
    int pure = 0;
    for (std::size_t k = 0; k < C; ++k) {
        if (d[k] % m == 0) {
            ++pure;
            continue;
        }
        for (std::size_t j = 0; j < N; ++j)
            if (j != i && d[k] >= a[j] && (d[k] - a[j]) % m == 0) ext[k] |= 1u << j;
    }
    if (C == 1) return pure == 1 || ext[0] != 0;
    if (pure >= 1) return true;
    return ext[0] && ext[C - 1] && std::popcount(ext[0] | ext[C - 1]) >= 2;
}

template <std::size_t N, std::size_t C>
bool all_vertices_ok(const std::array<int, N>& a, const std::array<int, C>& d)
{
    for (std::size_t i = N; i-- > 0;)
        if (!vertex_ok(a, d, i)) return false;
    return true;
}

bool admissible(const SurfaceFamily& f)
{
    return index(f.weights, f.degrees) == 1 && !is_linear_cone(f.weights, f.degrees) &&
           surface_well_formed(f.weights, f.degrees) && quasi_smooth_general(f.weights, f.degrees);
}

// Solutions x of c x = e (mod m) as (start, step), or step 0 when none.
std::pair<long long, long long> solve_congruence(long long c, long long e, long long m)
{
    c %= m;
    e = ((e % m) + m) % m;
    long long g = std::gcd(c, m);
    if (e % g != 0) return {0, 0};
    long long mm = m / g, cc = c / g, ee = e / g;
    if (mm == 1) return {0, 1};
    long long inv = 1;
    for (long long r0 = cc, r1 = mm, s0 = 1, s1 = 0; r1 != 0;) {
        long long q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
        inv = s0;
    }
    long long x = ((ee * inv) % mm + mm) % mm;
    return {x, mm};
}

void enumerate_hypersurfaces(int bound, std::set<std::pair<std::vector<int>, std::vector<int>>>& raw)
{
    for (int a0 = 1; a0 <= bound; ++a0)
        for (int a1 = a0; a1 <= bound; ++a1)
            for (int a2 = a1; a2 <= bound; ++a2) {
                const int s3 = a0 + a1 + a2;
                // The largest weight a3 needs x3^k or x3^k x_j in degree d = s3 + a3 - 1.
                int cand[5] = {s3 - 1, (s3 - 1) % 2 == 0 ? (s3 - 1) / 2 : 0, a1 + a2 - 1, a0 + a2 - 1, a0 + a1 - 1};
                for (int a3 : cand) {
                    if (a3 < a2 || a3 > bound) continue;
                    std::array<int, 4> a{a0, a1, a2, a3};
                    std::array<int, 1> d{s3 + a3 - 1};
                    if (!all_vertices_ok(a, d)) continue;
                    raw.insert({{a0, a1, a2, a3}, {d[0]}});
                }
            }
}

void enumerate_complete_intersections(int bound, std::set<std::pair<std::vector<int>, std::vector<int>>>& raw)
{
    auto consider = [&](const std::array<int, 5>& a, int d1, int d2) {
        if (d1 < 1 || d2 < 1) return;
        std::array<int, 2> d{std::min(d1, d2), std::max(d1, d2)};
        if (!all_vertices_ok(a, d)) return;
        raw.insert({{a.begin(), a.end()}, {d[0], d[1]}});
    };
    for (int a0 = 1; a0 <= bound; ++a0)
        for (int a1 = a0; a1 <= bound; ++a1)
            for (int a2 = a1; a2 <= bound; ++a2)
                for (int a3 = a2; a3 <= bound; ++a3) {
                    const int w[4] = {a0, a1, a2, a3};
                    const int s4 = a0 + a1 + a2 + a3;
                    // The vertex P4 has two tangent monomials x4 x_e in distinct equations.
                    for (int f1 = 0; f1 < 4; ++f1)
                        for (int f2 = f1 + 1; f2 < 4; ++f2) {
                            int a4 = w[f1] + w[f2] - 1;
                            if (a4 < a3 || a4 > bound) continue;
                            int e[2], k = 0;
                            for (int g = 0; g < 4; ++g)
                                if (g != f1 && g != f2) e[k++] = w[g];
                            consider({a0, a1, a2, a3, a4}, a4 + e[0], a4 + e[1]);
                        }
                    // Or one equation has degree k a4; the other is then fixed by the index.
                    for (int k = 2; k <= 4; ++k) {
                        const int hi = std::min(bound, (s4 - 2) / (k - 1));
                        if (hi < a3) continue;
                        // Progressions in a4 covering every case of the vertex P3.
                        const long long m = a3;
                        std::pair<long long, long long> prog[6] = {
                            solve_congruence(k, 0, m),      solve_congruence(k - 1, s4 - 1, m),
                            solve_congruence(k - 1, 0, m),  solve_congruence(k, a0, m),
                            solve_congruence(k, a1, m),     solve_congruence(k, a2, m),
                        };
                        std::sort(std::begin(prog), std::end(prog));
                        for (int pi = 0; pi < 6; ++pi) {
                            auto [x0, step] = prog[pi];
                            if (step == 0) continue;
                            if (pi > 0 && prog[pi] == prog[pi - 1]) continue;
                            long long first = x0 + ((a3 - x0 + step - 1) / step) * step;
                            for (long long a4 = first; a4 <= hi; a4 += step) {
                                int dm = k * static_cast<int>(a4);
                                int dn = s4 - 1 - (k - 1) * static_cast<int>(a4);
                                consider({a0, a1, a2, a3, static_cast<int>(a4)}, dm, dn);
                            }
                        }
                    }
                }
}

}  // namespace

std::vector<SurfaceFamily> enumerate_candidates(int bound, int codim)
{
    if (codim != 1 && codim != 2) throw std::invalid_argument("codim must be 1 or 2");
    std::vector<SurfaceFamily> out;
    if (bound < 1) return out;
    std::set<std::pair<std::vector<int>, std::vector<int>>> raw;
    if (codim == 1) enumerate_hypersurfaces(bound, raw);
    else enumerate_complete_intersections(bound, raw);
    for (const auto& [w, d] : raw) {
        SurfaceFamily f = make_family(w, d);
        if (admissible(f)) out.push_back(std::move(f));
    }
    return out;
}

}  // namespace wps
