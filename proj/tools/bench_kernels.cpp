// Timing harness for the two data-parallel kernels: the cyclic-lattice
// relation build (one row of containment/meet bits per generator class)
// and the all-sources BFS sweep.  Runs each kernel serially and in
// parallel on the same input and prints the ratio, so regressions in
// either path show up immediately.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "ggraph/analysis.hpp"
#include "ggraph/cyclic.hpp"
#include "ggraph/graph.hpp"
#include "ggraph/group.hpp"

using namespace ggraph;

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

template <typename F>
double best_of(int reps, F&& f) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        double t0 = now_ms();
        f();
        best = std::min(best, now_ms() - t0);
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kernel benchmark: serial vs parallel"};
    std::string spec = "Z(60) x Z(60)";
    int reps = 3;
    app.add_option("--group", spec, "group to build the inputs from");
    app.add_option("--reps", reps, "repetitions, best time wins");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP, parallel path degenerates to serial\n");
#endif

    FiniteGroup G = build_group(spec);
    std::printf("group %s, order %ld\n", G.name().c_str(), G.order());

    double lat_s = best_of(reps, [&] { CyclicLattice::build(G, Exec::Serial); });
    double lat_p = best_of(reps, [&] { CyclicLattice::build(G, Exec::Parallel); });
    CyclicLattice L = CyclicLattice::build(G);
    std::printf("lattice relations (%d classes): serial %.1f ms, parallel %.1f ms, x%.2f\n",
                L.num_classes(), lat_s, lat_p, lat_s / lat_p);

    Graph g = build_graph(L, GraphKind::Power);
    SweepResult serial, parallel;
    double bfs_s = best_of(reps, [&] { serial = bfs_sweep(g, Exec::Serial); });
    double bfs_p = best_of(reps, [&] { parallel = bfs_sweep(g, Exec::Parallel); });
    bool same = serial.ecc == parallel.ecc && serial.girth == parallel.girth;
    std::printf("bfs sweep (%d vertices, %ld edges): serial %.1f ms, parallel %.1f ms, x%.2f\n",
                g.n(), g.m(), bfs_s, bfs_p, bfs_s / bfs_p);
    std::printf("results %s\n", same ? "identical" : "DIFFER");
    return same ? 0 : 1;
}
