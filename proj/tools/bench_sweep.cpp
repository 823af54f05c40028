// Times the reference sweep against the OpenMP kernel on one marked diagram.
//
//   bench_sweep D5 all --workers 8 --repeat 3
//   bench_sweep E6 all --workers 8 --degree 13

#include <chrono>
#include <iostream>

#include "CLI11.hpp"
#include "egd/ed_engine.hpp"
#include "egd/sweep.hpp"

using namespace egd;

int main(int argc, char** argv) {
  CLI::App app{"sweep kernel benchmark"};
  std::string diagram = "D5", marked = "all";
  int workers = 8, repeat = 3, degree = -1;
  app.add_option("diagram", diagram);
  app.add_option("marked", marked);
  app.add_option("--workers", workers);
  app.add_option("--repeat", repeat);
  app.add_option("--degree", degree, "sweep degree (default ed + 1)");
  CLI11_PARSE(app, argc, argv);

  const MarkedDiagram md = MarkedDiagram::parse(diagram, marked);
  const WeylGroup group(md.spec);
  const LengthStrata strata = quotient_strata(group, md.parabolic());
  if (degree < 0) {
    EngineOptions opt;
    opt.extended = true;
    opt.workers = workers;
    degree = effective_divisibility(group, md, Method::BruteForce, opt).value + 1;
  }
  if (degree > strata.max_length()) degree = strata.max_length();

  SweepRequest req;
  req.degree = degree;
  req.halve = md.parabolic().empty();

  auto time_it = [&](auto&& fn) {
    double best = 1e30;
    std::size_t found = 0;
    for (int r = 0; r < repeat; ++r) {
      const auto t0 = std::chrono::steady_clock::now();
      found = fn().size();
      const auto t1 = std::chrono::steady_clock::now();
      best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return std::make_pair(best, found);
  };

  const auto [t_serial, n_serial] = time_it([&] { return sweep_serial(group, strata, req); });
  const auto [t_one, n_one] = time_it([&] { return sweep_parallel(group, strata, req, 1); });
  const auto [t_par, n_par] = time_it([&] { return sweep_parallel(group, strata, req, workers); });

  std::cout << md.str() << " |W^J|=" << strata.total() << " degree=" << degree << "\n"
            << "serial reference      " << t_serial << " ms  violations=" << n_serial << "\n"
            << "omp, 1 worker         " << t_one << " ms  violations=" << n_one << "\n"
            << "omp, " << workers << " workers" << (workers < 10 ? "       " : "      ") << t_par
            << " ms  violations=" << n_par << "\n";
  return (n_serial == n_one && n_one == n_par) ? 0 : 1;
}
