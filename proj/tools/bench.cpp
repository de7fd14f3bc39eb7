// Timing comparison between the serial reference implementations and the
// OpenMP kernels; also checks that the two agree on every instance.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ggt/ball.hpp"
#include "ggt/median.hpp"
#include "ggt/pocset.hpp"
#include "ggt/reference.hpp"
#include "ggt/window.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

// One warm-up pass, then the measured pass.
double run_ms(const std::function<void()>& body)
{
    body();
    auto t0 = clock_type::now();
    body();
    auto t1 = clock_type::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool agree)
{
    std::printf("%-34s %10.1f ms %10.1f ms %7.2fx  %s\n", name.c_str(), serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, agree ? "ok" : "MISMATCH");
}

}  // namespace

int main()
{
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serially\n");
#endif
    std::printf("%-34s %13s %13s %8s\n", "kernel", "reference", "parallel", "speedup");

    auto matrix_digest = [](const std::vector<std::vector<int>>& m) {
        std::uint64_t h = 1469598103934665603ull;
        for (const auto& row : m)
            for (int v : row) h = (h ^ static_cast<std::uint64_t>(v)) * 1099511628211ull;
        return h;
    };
    {
        // 64x64 grid
        const int side = 64;
        std::vector<std::pair<int, int>> edges;
        for (int y = 0; y < side; ++y)
            for (int x = 0; x < side; ++x) {
                if (x + 1 < side) edges.emplace_back(y * side + x, y * side + x + 1);
                if (y + 1 < side) edges.emplace_back(y * side + x, (y + 1) * side + x);
            }
        auto g = ggt::make_median_graph(side * side, std::move(edges));
        std::uint64_t serial = 0, parallel = 0;
        double s =
            run_ms([&] { serial = matrix_digest(ggt::reference::distance_matrix(g.graph)); });
        double p = run_ms([&] { parallel = matrix_digest(ggt::distance_matrix(g.graph)); });
        report("distance matrix (64x64 grid)", s, p, serial == parallel);
    }
    {
        auto ball = ggt::build_ball(ggt::houghton_action(4), {1, 1}, 1000);
        std::uint64_t serial = 0, parallel = 0;
        double s = run_ms([&] {
            serial = matrix_digest(ggt::reference::distance_matrix(ball.simple_view()));
        });
        double p =
            run_ms([&] { parallel = matrix_digest(ggt::distance_matrix(ball.simple_view())); });
        report("distance matrix (Y_4 ball 1000)", s, p, serial == parallel);
    }
    {
        auto g = ggt::staircase_window(18).window();
        bool serial_ok = false, parallel_ok = false;
        double s = run_ms(
            [&] { serial_ok = !ggt::reference::median_violation(g).has_value(); });
        double p = run_ms([&] { parallel_ok = ggt::is_median(g).ok; });
        report("median check (staircase 18)", s, p, serial_ok == parallel_ok);
    }
    {
        auto g = ggt::cube_graph(11);
        std::vector<std::vector<int>> serial;
        std::vector<ggt::Hyperplane> parallel;
        double s = run_ms([&] { serial = ggt::reference::hyperplane_edge_classes(g); });
        double p = run_ms([&] { parallel = ggt::hyperplanes(g); });
        report("hyperplanes (11-cube)", s, p, serial.size() == parallel.size());
    }
    {
        auto g = ggt::spider_graph(26, 10);
        auto planes = ggt::hyperplanes(g);
        std::vector<std::array<int, 3>> serial, parallel;
        double s = run_ms([&] { serial = ggt::reference::facing_triples(g, planes); });
        double p = run_ms([&] { parallel = ggt::facing_triples(g, planes); });
        report("facing triples (spider 26x10)", s, p, serial == parallel);
    }
    {
        auto p = ggt::crossing_walls(20);
        std::vector<std::uint32_t> serial, parallel;
        double s = run_ms([&] { serial = ggt::reference::dual_orientations(p); });
        double t = run_ms([&] { parallel = ggt::consistent_orientations(p); });
        report("dual orientations (20 walls)", s, t, serial == parallel);
    }
    return 0;
}
