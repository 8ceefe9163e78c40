// Benchmark comparing the OpenMP kernels against the serial reference
// implementations on a larger time-series model.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "lci/info.hpp"
#include "lci/monomial_ideal.hpp"
#include "lci/parallel.hpp"
#include "lci/ref.hpp"
#include "lci/rng.hpp"
#include "lci/timeseries.hpp"

using namespace lci;

namespace {

double seconds(std::chrono::steady_clock::duration d) {
    return std::chrono::duration<double>(d).count();
}

template <class F>
double time_call(F&& fn, int reps) {
    auto best = std::chrono::steady_clock::duration::max();
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, t1 - t0);
    }
    return seconds(best);
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-28s serial %9.4fs  parallel %9.4fs  speedup %5.2fx\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

} // namespace

int main(int argc, char** argv) {
    int horizon = 6; // 3 series x horizon binary variables
    int reps = 3;
    if (argc > 1) horizon = std::atoi(argv[1]);
    if (argc > 2) reps = std::atoi(argv[2]);

    SeriesSpec spec{3, horizon, 2};
    Tdag g = timeseries_tdag(spec);
    const int n = g.size();
    std::printf("model: 3 series, horizon %d (%d binary variables, %lld assignments), %d threads\n",
                horizon, n, 1LL << n, par::max_threads());

    auto d = joint_from_tdag(g, std::vector<int>(static_cast<size_t>(n), 2), 1);
    const auto& ground = g.vertices();

    // First/third series up to t independent of each other given hub past.
    IndexSet a(n), b(n), c(n);
    for (int s = 1; s <= horizon; ++s) {
        a.set(ground.index_of(spec.label(1, s)));
        b.set(ground.index_of(spec.label(3, s)));
        if (s < horizon) c.set(ground.index_of(spec.label(2, s)));
    }
    CiStatement stmt(a, b, c);

    double s_ci = time_call([&] { (void)ref::check_ci(d, stmt, 1e-9); }, reps);
    double p_ci = time_call([&] { (void)check_ci(d, stmt, 1e-9); }, reps);
    report("check_ci", s_ci, p_ci);

    double s_hibi = time_call(
        [&] { (void)ref::check_hibi_relation(d, a.set_union(c), b.set_union(c), 1e-9); }, reps);
    double p_hibi =
        time_call([&] { (void)check_hibi_relation(d, a.set_union(c), b.set_union(c), 1e-9); }, reps);
    report("check_hibi_relation", s_hibi, p_hibi);

    double s_margin = time_call([&] { (void)ref::margin(d, a.set_union(c)); }, reps);
    double p_margin = time_call([&] { (void)margin(d, a.set_union(c)); }, reps);
    report("margin", s_margin, p_margin);

    double s_h = time_call([&] { (void)ref::shannon_H(d, a); }, reps);
    double p_h = time_call([&] { (void)shannon_H(d, a); }, reps);
    report("shannon_H", s_h, p_h);

    // Support minimization on a random squarefree family.
    Rng rng(5);
    std::vector<IndexSet> supports;
    for (int k = 0; k < 3000; ++k) {
        IndexSet s(24);
        for (int v = 0; v < 24; ++v) {
            if (rng.next_double() < 0.35) s.set(v);
        }
        supports.push_back(s);
    }
    double s_min = time_call([&] { (void)ref::minimize_supports(supports); }, reps);
    double p_min = time_call([&] { (void)minimize_supports(supports); }, reps);
    report("minimize_supports", s_min, p_min);

    return 0;
}
