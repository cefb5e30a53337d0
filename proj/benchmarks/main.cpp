#include <benchmark/benchmark.h>

#include <hironaka/driver.hpp>
#include <hironaka/expr.hpp>

using namespace hironaka;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Poly dense_poly(unsigned degree) {
    Poly p(Q);
    for (unsigned i = 0; i <= degree; ++i) {
        for (unsigned j = 0; i + j <= degree; ++j) {
            p.add_term(Exponent{i, j, 0},
                       Scalar(Q, Rational(static_cast<long>(1 + i + 2 * j),
                                          static_cast<long>(1 + (i * j) % 5))));
        }
    }
    return p;
}

void poly_multiply(benchmark::State& state) {
    Poly a = dense_poly(static_cast<unsigned>(state.range(0)));
    Poly b = dense_poly(static_cast<unsigned>(state.range(0)) / 2 + 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(poly_multiply)->Arg(4)->Arg(8)->Arg(16);

void staircase_hull(benchmark::State& state) {
    std::vector<PolygonPoint> pts;
    unsigned count = static_cast<unsigned>(state.range(0));
    for (unsigned i = 0; i < count; ++i) {
        Rational x(static_cast<long>((i * 37) % 97), static_cast<long>(1 + i % 6));
        Rational y(static_cast<long>((i * 61) % 89), static_cast<long>(1 + i % 4));
        x.canonicalize();
        y.canonicalize();
        pts.push_back(PolygonPoint{x, y});
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(NewtonPolygon::hull(pts));
    }
}
BENCHMARK(staircase_hull)->Arg(16)->Arg(128)->Arg(1024);

void polygon_minimize(benchmark::State& state) {
    auto s = WeierstrassSurface::from_poly(
        parse_poly("Z^2 + 2*X*Y*Z + X^2*Y^2 + X^5", Q));
    for (auto _ : state) {
        benchmark::DoNotOptimize(minimize(s));
    }
}
BENCHMARK(polygon_minimize);

void near_point_search(benchmark::State& state) {
    auto s = counterexample_surface(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(near_points(s));
    }
}
BENCHMARK(near_point_search)->Arg(19)->Arg(51);

void resolve_family(benchmark::State& state) {
    auto s = counterexample_surface(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run(s, Strategy::automatic()));
    }
}
BENCHMARK(resolve_family)->Arg(19)->Arg(35)->Arg(51)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
