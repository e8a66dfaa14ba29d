#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zdg/construct.hpp"
#include "zdg/invariants.hpp"

namespace {

double time_ms(const std::function<void()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    int64_t vertices = 2000;
    int p4_vertices = 120;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--vertices" && i + 1 < argc) {
            vertices = std::atoll(argv[++i]);
        } else if (arg == "--p4-vertices" && i + 1 < argc) {
            p4_vertices = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: bench_kernels [--vertices N] [--p4-vertices M]\n";
            return 2;
        }
    }

    // Construction kernel: the level controls the scalar window, so the
    // gamma2 case at d=1 (8 vertices per level) scales linearly.
    const zdg::RingDesc ring = zdg::RingDesc::of(1);
    const int64_t level = std::max<int64_t>(1, vertices / 8);
    const zdg::TruncationSpec spec = zdg::make_spec(ring, zdg::TruncCase::Gamma2, level);
    const std::vector<zdg::TcVertex> verts = zdg::family_vertices(spec);

    zdg::ZdGraph serial_graph(0), parallel_graph(0);
    const double construct_serial = time_ms([&] { serial_graph = zdg::build_graph_serial(verts); });
    const double construct_parallel = time_ms([&] { parallel_graph = zdg::build_graph(verts); });
    const bool construct_agree = serial_graph == parallel_graph;

    // P4 scan worst case: a cograph forces both routes through every
    // quadruple.
    const int half = std::max(2, p4_vertices / 2);
    const zdg::ZdGraph p4_graph = zdg::join(zdg::complete_graph(half), zdg::empty_graph(half));
    bool p4_serial_result = false, p4_parallel_result = false;
    const double p4_serial = time_ms([&] { p4_serial_result = zdg::is_cograph_serial(p4_graph); });
    const double p4_parallel = time_ms([&] { p4_parallel_result = zdg::is_cograph(p4_graph); });
    const bool p4_agree = p4_serial_result == p4_parallel_result;

    std::cout << "kernel               n      serial_ms  parallel_ms  speedup  agree\n";
    const auto row = [](const char* name, int64_t n, double s, double p, bool agree) {
        std::printf("%-20s %-6lld %-10.2f %-12.2f %-8.2f %s\n", name, (long long)n, s, p,
                    p > 0 ? s / p : 0.0, agree ? "yes" : "NO");
    };
    row("graph_construction", (int64_t)verts.size(), construct_serial, construct_parallel,
        construct_agree);
    row("p4_scan", p4_graph.n(), p4_serial, p4_parallel, p4_agree);
#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (compiled without OpenMP)\n";
#endif
    return (construct_agree && p4_agree) ? 0 : 1;
}
