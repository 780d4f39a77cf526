#include "ntf/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include "ntf/exactalg.hpp"
#include "ntf/gamma.hpp"
#include "ntf/golden.hpp"
#include "ntf/homology.hpp"
#include "ntf/ideal.hpp"
#include "ntf/numtheory.hpp"
#include "ntf/series.hpp"
#include "ntf/version.hpp"

namespace ntf::cli {

namespace {

namespace nt = ntf::numtheory;
using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string join_args(const std::vector<std::string>& args) {
  std::string s = "ntf";
  for (const auto& a : args) s += " " + a;
  return s;
}

json poly_json(const BiPoly& p) {
  json arr = json::array();
  for (const auto& [k, c] : p.terms())
    arr.push_back(json::array({k.first, k.second, c.get_str()}));
  return arr;
}

std::string counts_list(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

std::vector<std::int64_t> graded_coeff_list(const ideal::GenTable& tab,
                                            int v) {
  int dmax = 1;
  for (const auto& [vd, c] : tab.by_support_degree)
    if (vd.first == v) dmax = std::max(dmax, vd.second);
  std::vector<std::int64_t> coeffs;
  for (int d = 2; d <= dmax; ++d) {
    auto it = tab.by_support_degree.find({v, d});
    coeffs.push_back(it == tab.by_support_degree.end() ? 0 : it->second);
  }
  return coeffs;
}

// ---- counts ---------------------------------------------------------------

void emit_counts(std::ostream& out, const std::string& cmdline,
                 std::int64_t nmax, bool graded, const std::string& format) {
  std::vector<ideal::GenTable> tables;
  for (std::int64_t n = 2; n <= nmax; ++n) tables.push_back(ideal::min_gens(n));

  if (!graded) {
    if (format == "csv") {
      int rmax = 0;
      for (const auto& t : tables) rmax = std::max(rmax, t.r);
      out << "n,C_n";
      for (int v = 1; v <= rmax; ++v) out << ",C_n_" << v;
      out << "\n";
      for (const auto& t : tables) {
        out << t.n << "," << t.total();
        for (int v = 1; v <= rmax; ++v) {
          out << ",";
          if (v <= t.r) out << t.by_min_support[v - 1];
        }
        out << "\n";
      }
    } else if (format == "json") {
      json doc;
      doc["command"] = cmdline;
      doc["nmax"] = nmax;
      doc["format"] = "json";
      doc["version"] = kVersion;
      doc["rows"] = json::array();
      for (const auto& t : tables)
        doc["rows"].push_back({{"n", t.n},
                               {"total", t.total()},
                               {"by_min_support", t.by_min_support}});
      out << doc.dump(2) << "\n";
    } else {
      for (const auto& t : tables)
        out << "n=" << t.n << " total=" << t.total()
            << " counts=" << counts_list(t.by_min_support) << "\n";
    }
    return;
  }

  if (format == "json") {
    json doc;
    doc["command"] = cmdline;
    doc["nmax"] = nmax;
    doc["format"] = "json";
    doc["version"] = kVersion;
    doc["rows"] = json::array();
    for (const auto& t : tables)
      for (int v = 1; v <= t.r; ++v)
        doc["rows"].push_back(
            {{"n", t.n}, {"v", v}, {"coeffs", graded_coeff_list(t, v)}});
    out << doc.dump(2) << "\n";
  } else if (format == "csv") {
    int dmax = 2;
    for (const auto& t : tables)
      for (const auto& [vd, c] : t.by_support_degree)
        dmax = std::max(dmax, vd.second);
    out << "n,v";
    for (int d = 2; d <= dmax; ++d) out << ",d" << d;
    out << "\n";
    for (const auto& t : tables)
      for (int v = 1; v <= t.r; ++v) {
        out << t.n << "," << v;
        auto coeffs = graded_coeff_list(t, v);
        for (int d = 2; d <= dmax; ++d) {
          out << ",";
          std::size_t idx = static_cast<std::size_t>(d - 2);
          if (idx < coeffs.size()) out << coeffs[idx];
        }
        out << "\n";
      }
  } else {
    for (const auto& t : tables)
      for (int v = 1; v <= t.r; ++v)
        out << "n=" << t.n << " v=" << v
            << " coeffs=" << counts_list(graded_coeff_list(t, v)) << "\n";
  }
}

// ---- verification suites --------------------------------------------------

struct SuiteRunner {
  std::ostream& out;
  int failures = 0;
  void check(const std::string& label, bool ok) {
    out << (ok ? "[ ok ] " : "[FAIL] ") << label << "\n";
    if (!ok) ++failures;
  }
};

void suite_figures(SuiteRunner& s, std::int64_t nmax) {
  for (const auto& row : golden::counts_rows()) {
    if (row.n > nmax) break;
    auto tab = ideal::min_gens(row.n);
    bool ok = tab.total() == row.total &&
              tab.by_min_support == row.by_min_support;
    s.check("counts n=" + std::to_string(row.n), ok);
  }
  {
    bool ok = true;
    std::int64_t upto = std::min<std::int64_t>(nmax, 30);
    std::vector<ideal::GenTable> tables;
    for (std::int64_t n = 2; n <= upto; ++n)
      tables.push_back(ideal::min_gens(n));
    for (const auto& row : golden::graded_rows()) {
      if (row.n > upto) break;
      const auto& tab = tables[static_cast<std::size_t>(row.n - 2)];
      if (graded_coeff_list(tab, row.v) != row.coeffs) ok = false;
    }
    s.check("graded counts n=2.." + std::to_string(upto), ok);
  }
  for (const auto& row : golden::residue_series()) {
    if (row.n > nmax) break;
    bool ok = format_canonical(series::golod_poincare(row.n)) == row.text;
    s.check("series n=" + std::to_string(row.n), ok);
  }
  for (const auto& row : golden::residue_series_graded()) {
    if (row.n > nmax) break;
    bool ok =
        format_canonical(series::golod_poincare_graded(row.n)) == row.text;
    s.check("graded series n=" + std::to_string(row.n), ok);
  }
}

void suite_theorems(SuiteRunner& s, std::int64_t nmax) {
  bool sizes_ok = true, lower_ok = true, binom_ok = true, even_ok = true,
       ceil_ok = true, degrees_ok = true;
  std::vector<std::int64_t> prev;
  std::vector<std::int64_t> tail_dev(4, 1);         // per v = 1..3
  std::vector<std::int64_t> tail_dev_graded(4, 1);  // per v = 1..3
  for (std::int64_t n = 2; n <= nmax; ++n) {
    auto tab = ideal::min_gens(n);
    const int r = tab.r;
    std::int64_t sum = 0;
    for (auto c : tab.by_min_support) sum += c;
    if (static_cast<int>(tab.by_min_support.size()) != r ||
        sum != tab.total())
      sizes_ok = false;
    for (int v = 1; v <= r; ++v)
      if (tab.by_min_support[static_cast<std::size_t>(r - v)] < v)
        lower_ok = false;
    if (tab.total() < static_cast<std::int64_t>(r) * (r + 1) / 2)
      binom_ok = false;
    if (n % 2 == 0 && n > 2 && tab.by_min_support != prev) even_ok = false;
    if (tab.by_min_support[0] != (n + 1) / 2) ceil_ok = false;
    for (const auto& [vd, c] : tab.by_support_degree)
      if (vd.second < 2) degrees_ok = false;
    for (int v = 1; v <= 3; ++v) {
      const int idx = 1 + r - v;
      std::int64_t cv =
          (idx >= 1 && idx <= r) ? tab.by_min_support[idx - 1] : 0;
      if (cv != v) tail_dev[v] = n;
      std::int64_t cvd2 = 0;
      bool other_degrees = false;
      for (const auto& [vd, c] : tab.by_support_degree)
        if (vd.first == idx) {
          if (vd.second == 2)
            cvd2 = c;
          else
            other_degrees = true;
        }
      if (cvd2 != v || other_degrees) tail_dev_graded[v] = n;
    }
    prev = tab.by_min_support;
  }
  s.check("count vector sizes and totals", sizes_ok);
  s.check("count lower bounds per support index", lower_ok);
  s.check("total count lower bound binom(r+1,2)", binom_ok);
  s.check("even levels repeat the previous counts", even_ok);
  s.check("first-support count is ceil(n/2)", ceil_ok);
  s.check("no generators of degree < 2", degrees_ok);
  for (int v = 1; v <= 3; ++v) {
    bool ok = tail_dev[v] + 10 <= nmax;
    s.check("count tail settles at v=" + std::to_string(v) +
                " (last deviation n=" + std::to_string(tail_dev[v]) + ")",
            ok);
    bool okg = tail_dev_graded[v] + 10 <= nmax;
    s.check("graded tail settles at v=" + std::to_string(v) +
                " (last deviation n=" + std::to_string(tail_dev_graded[v]) +
                ")",
            okg);
  }
  bool dim_ok = true, prime_ok = true;
  for (std::int64_t n = 1; n <= nmax; ++n) {
    auto h = series::hilbert_bigraded(n);
    if (h.poly.sum_of_coeffs() != n) dim_ok = false;
    BiPoly tonly = specialize_u(h.poly);
    if (tonly.coeff(1, 0) != nt::prime_count(n)) prime_ok = false;
  }
  s.check("hilbert total dimension equals n", dim_ok);
  s.check("hilbert t-linear coefficient equals prime count", prime_ok);
}

void suite_gamma(SuiteRunner& s, std::int64_t nmax, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  auto random_fn = [&gen](int n) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    gamma::TruncFn f(n);
    for (int m = 1; m <= n; ++m) {
      Rat v(num(gen), den(gen));
      v.canonicalize();
      f.set(m, v);
    }
    return f;
  };

  {
    bool ok = true;
    std::uniform_int_distribution<int> level(2, 50);
    for (int trial = 0; trial < 20 && ok; ++trial) {
      int n = level(gen);
      auto f = random_fn(n), g = random_fn(n), h = random_fn(n);
      if (gamma::convolve(f, g) != gamma::convolve(g, f)) ok = false;
      if (gamma::convolve(gamma::convolve(f, g), h) !=
          gamma::convolve(f, gamma::convolve(g, h)))
        ok = false;
      if (gamma::convolve(f, g + h) !=
          gamma::convolve(f, g) + gamma::convolve(f, h))
        ok = false;
      if (gamma::convolve(gamma::epsilon(n), f) != f) ok = false;
    }
    s.check("ring laws (randomized)", ok);
  }
  {
    bool ok = true;
    std::int64_t upto = std::min<std::int64_t>(nmax, 200);
    for (int n = 1; n <= upto; ++n)
      if (gamma::convolve(gamma::moebius_fn(n), gamma::nu0(n)) !=
          gamma::epsilon(n))
        ok = false;
    s.check("moebius convolved with the constant function is the unit", ok);
  }
  {
    bool ok = true;
    for (int n : {6, 30, 60}) {
      if (n > nmax) continue;
      if (gamma::invert(gamma::nu0(n)) != gamma::moebius_fn(n)) ok = false;
    }
    s.check("inverse of the constant function is moebius", ok);
  }
  {
    bool ok = true;
    for (int trial = 0; trial < 20 && ok; ++trial) {
      int n = 30;
      auto f = random_fn(n), g = random_fn(n);
      if (f.is_zero() || g.is_zero()) continue;
      std::int64_t nf = gamma::norm_N(f), ng = gamma::norm_N(g);
      if (nf * ng <= n &&
          gamma::norm_N(gamma::convolve(f, g)) != nf * ng)
        ok = false;
    }
    s.check("norm multiplicativity within range", ok);
  }
  {
    bool ok = true;
    int top = static_cast<int>(std::min<std::int64_t>(nmax, 30));
    auto f = random_fn(top);
    for (int n2 = 1; n2 <= top && ok; ++n2) {
      auto once = gamma::truncate(f, n2);
      for (int n1 = 1; n1 <= n2; ++n1)
        if (gamma::truncate(once, n1) != gamma::truncate(f, n1)) ok = false;
    }
    auto g = random_fn(top);
    for (int k = 1; k <= top && ok; ++k)
      if (gamma::truncate(gamma::convolve(f, g), k) !=
          gamma::convolve(gamma::truncate(f, k), gamma::truncate(g, k)))
        ok = false;
    s.check("truncation tower coherence", ok);
  }
}

void suite_oracles(SuiteRunner& s, std::ostream& err, std::int64_t nmax,
                   int qmax, bool modular, std::uint64_t seed) {
  for (std::int64_t n = 2; n <= std::min<std::int64_t>(nmax, 12); ++n) {
    auto start = Clock::now();
    const int r = nt::prime_count(n);
    auto dims = homology::koszul_tor_dims(n, r);
    auto betti = series::betti_numbers_ideal(n);
    bool ok = true;
    for (int q = 1; q <= r; ++q) {
      Int expect = q - 1 < static_cast<int>(betti.size()) ? betti[q - 1] : 0;
      if (Int(dims.total(q)) != expect) ok = false;
    }
    if (n <= 9) {
      BiPoly graded = series::ek_poincare_ideal_graded(n);
      for (int q = 1; q <= r; ++q)
        for (int j = 0; j <= graded.u_degree() + 1; ++j)
          if (Int(dims.at(q, j)) != graded.coeff(q - 1, j)) ok = false;
    }
    s.check("koszul oracle n=" + std::to_string(n), ok);
    err << "koszul n=" << n << " " << seconds_since(start) << "s\n";
  }

  for (std::int64_t n = 2; n <= std::min<std::int64_t>(nmax, 6); ++n) {
    auto start = Clock::now();
    const int q_top = std::min(qmax, 4);
    auto dims = homology::bar_tor_dims(n, q_top);
    auto graded = series_expand(series::golod_poincare_graded(n), q_top);
    auto plain = series_expand(series::golod_poincare(n), q_top);
    bool ok = true;
    for (int q = 0; q <= q_top; ++q) {
      if (Int(dims.total(q)) != plain[q].coeff(0, 0)) ok = false;
      for (int j = 0; j <= graded[q].u_degree() + 1; ++j)
        if (Int(dims.at(q, j)) != graded[q].coeff(0, j)) ok = false;
    }
    s.check("bar oracle (exact) n=" + std::to_string(n), ok);
    err << "bar n=" << n << " q<=" << q_top << " "
        << seconds_since(start) << "s\n";
  }

  if (modular) {
    for (std::int64_t n = 7; n <= std::min<std::int64_t>(nmax, 10); ++n) {
      auto start = Clock::now();
      const int q_top = std::min(qmax, 3);
      homology::BarOptions opts;
      opts.mode = homology::RankMode::modular;
      opts.seed = seed;
      auto dims = homology::bar_tor_dims(n, q_top, opts);
      auto plain = series_expand(series::golod_poincare(n), q_top);
      bool ok = true;
      for (int q = 0; q <= q_top; ++q)
        if (Int(dims.total(q)) != plain[q].coeff(0, 0)) ok = false;
      s.check("bar oracle (modular, probabilistic) n=" + std::to_string(n),
              ok);
      err << "bar-mod n=" << n << " q<=" << q_top << " "
          << seconds_since(start) << "s\n";
    }
  }

  {
    auto start = Clock::now();
    bool ok = true;
    for (std::int64_t n = 2; n <= nmax; ++n) {
      auto a = ideal::min_gens(n);
      auto b = ideal::min_gens_brute(n);
      if (a.gens != b.gens || a.by_min_support != b.by_min_support ||
          a.by_support_degree != b.by_support_degree)
        ok = false;
    }
    s.check("generator table equals brute-force scan (n<=" +
                std::to_string(nmax) + ")",
            ok);
    err << "gens-oracle " << seconds_since(start) << "s\n";
  }
}

// ---- command handlers -------------------------------------------------------

int run_parsed(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err);

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  try {
    return run_parsed(args, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

namespace {

int run_parsed(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"exact computation in truncated convolution algebras of "
               "arithmetic functions"};
  app.name("ntf");
  app.require_subcommand(1);

  std::int64_t n = 0;
  std::int64_t nmax = 0;
  bool brute = false, graded = false, bigraded = false;
  bool want_ideal = false, want_residue = false;
  bool modular = false, invert_flag = false;
  int qmax = 4;
  int chi_index = 1;
  std::uint64_t seed = 0x5eed;
  std::string format = "text";
  std::string suite, element;

  auto* c_gens = app.add_subcommand("gens", "minimal generators of the level-n ideal");
  c_gens->add_option("n", n)->required();
  c_gens->add_flag("--brute", brute, "use the brute-force scan");

  auto* c_counts = app.add_subcommand("counts", "generator counts per level");
  c_counts->add_option("--nmax", nmax)->required();
  c_counts->add_flag("--graded", graded, "split counts by total degree");
  c_counts->add_option("--format", format)
      ->check(CLI::IsMember({"text", "csv", "json"}));

  auto* c_hilbert = app.add_subcommand("hilbert", "dimension series of the level-n algebra");
  c_hilbert->add_option("n", n)->required();
  c_hilbert->add_flag("--bigraded", bigraded);
  c_hilbert->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json"}));

  auto* c_betti = app.add_subcommand("betti", "resolution ranks of the level-n ideal");
  c_betti->add_option("n", n)->required();

  auto* c_poincare = app.add_subcommand("poincare", "resolution series");
  c_poincare->add_option("n", n)->required();
  c_poincare->add_flag("--graded", graded);
  auto* oi = c_poincare->add_flag("--ideal", want_ideal, "series of the ideal");
  c_poincare->add_flag("--residue", want_residue, "series of the residue field (default)")
      ->excludes(oi);
  c_poincare->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json"}));

  auto* c_conj = app.add_subcommand("conjecture", "shape report for the residue series");
  c_conj->add_option("--nmax", nmax)->required();
  c_conj->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json"}));

  auto* c_gamma = app.add_subcommand("gamma", "distinguished truncated functions");
  c_gamma->add_option("element", element)
      ->required()
      ->check(CLI::IsMember({"epsilon", "nu0", "moebius", "chi"}));
  c_gamma->add_option("n", n)->required();
  c_gamma->add_option("--i", chi_index, "prime index for chi");
  c_gamma->add_flag("--invert", invert_flag, "print the convolution inverse");

  auto* c_verify = app.add_subcommand("verify", "run a verification suite");
  c_verify->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"figures", "oracles", "theorems", "gamma"}));
  auto* vn = c_verify->add_option("--nmax", nmax);
  c_verify->add_option("--qmax", qmax);
  c_verify->add_flag("--modular", modular);
  c_verify->add_option("--seed", seed);

  std::vector<const char*> argv;
  argv.push_back("ntf");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  const std::string cmdline = join_args(args);

  if (*c_gens) {
    if (n < 2) {
      err << "error: n must be >= 2\n";
      return 1;
    }
    auto tab = brute ? ideal::min_gens_brute(n) : ideal::min_gens(n);
    for (const auto& g : tab.gens) out << g.str() << "\n";
    return 0;
  }

  if (*c_counts) {
    if (nmax < 2) {
      err << "error: --nmax must be >= 2\n";
      return 1;
    }
    emit_counts(out, cmdline, nmax, graded, format);
    return 0;
  }

  if (*c_hilbert) {
    if (n < 1) {
      err << "error: n must be >= 1\n";
      return 1;
    }
    auto h = series::hilbert_bigraded(n);
    BiPoly shown = bigraded ? h.poly : specialize_u(h.poly);
    if (format == "json") {
      json doc;
      doc["command"] = cmdline;
      doc["n"] = n;
      doc["bigraded"] = bigraded;
      doc["format"] = "json";
      doc["version"] = kVersion;
      doc["coefficients"] = poly_json(shown);
      out << doc.dump(2) << "\n";
    } else {
      out << format_canonical(shown) << "\n";
    }
    return 0;
  }

  if (*c_betti) {
    if (n < 2) {
      err << "error: n must be >= 2\n";
      return 1;
    }
    auto betti = series::betti_numbers_ideal(n);
    for (std::size_t q = 0; q < betti.size(); ++q)
      out << (q > 0 ? " " : "") << betti[q].get_str();
    out << "\n";
    return 0;
  }

  if (*c_poincare) {
    if (n < 2) {
      err << "error: n must be >= 2\n";
      return 1;
    }
    auto tab = ideal::min_gens(n);
    if (want_ideal) {
      BiPoly p = graded ? series::ek_poincare_ideal_graded(tab)
                        : series::ek_poincare_ideal(tab);
      if (format == "json") {
        json doc;
        doc["command"] = cmdline;
        doc["n"] = n;
        doc["graded"] = graded;
        doc["which"] = "ideal";
        doc["format"] = "json";
        doc["version"] = kVersion;
        doc["coefficients"] = poly_json(p);
        out << doc.dump(2) << "\n";
      } else {
        out << format_canonical(p) << "\n";
      }
    } else {
      RatFn f = graded ? series::golod_poincare_graded(tab)
                       : series::golod_poincare(tab);
      if (format == "json") {
        json doc;
        doc["command"] = cmdline;
        doc["n"] = n;
        doc["graded"] = graded;
        doc["which"] = "residue";
        doc["format"] = "json";
        doc["version"] = kVersion;
        doc["numerator"] = poly_json(f.num);
        doc["denominator"] = poly_json(f.den);
        out << doc.dump(2) << "\n";
      } else {
        out << format_canonical(f) << "\n";
      }
    }
    return 0;
  }

  if (*c_conj) {
    if (nmax < 2) {
      err << "error: --nmax must be >= 2\n";
      return 1;
    }
    int failures = 0;
    json rows = json::array();
    for (std::int64_t k = 2; k <= nmax; ++k) {
      auto rep = series::check_conjecture(k);
      if (!rep.pass()) ++failures;
      if (format == "json") {
        json h = json::array();
        for (const auto& c : rep.h) h.push_back(c.get_str());
        rows.push_back({{"n", rep.n},
                        {"l1", rep.l1},
                        {"l2", rep.l2},
                        {"h", h},
                        {"q_at_minus_one", rep.q_at_minus_one.get_str()},
                        {"pass", rep.pass()}});
      } else {
        out << "n=" << rep.n << " l1=" << rep.l1 << " l2=" << rep.l2 << " h=[";
        for (std::size_t i = 0; i < rep.h.size(); ++i)
          out << (i > 0 ? "," : "") << rep.h[i].get_str();
        out << "] q(-1)=" << rep.q_at_minus_one.get_str()
            << " pass=" << (rep.pass() ? "yes" : "no") << "\n";
      }
    }
    if (format == "json") {
      json doc;
      doc["command"] = cmdline;
      doc["nmax"] = nmax;
      doc["format"] = "json";
      doc["version"] = kVersion;
      doc["failures"] = failures;
      doc["rows"] = rows;
      out << doc.dump(2) << "\n";
    } else {
      out << "failures=" << failures << "/" << (nmax - 1) << "\n";
    }
    return 0;
  }

  if (*c_gamma) {
    if (n < 1) {
      err << "error: n must be >= 1\n";
      return 1;
    }
    gamma::TruncFn f(static_cast<int>(n));
    if (element == "epsilon") f = gamma::epsilon(static_cast<int>(n));
    if (element == "nu0") f = gamma::nu0(static_cast<int>(n));
    if (element == "moebius") f = gamma::moebius_fn(static_cast<int>(n));
    if (element == "chi") f = gamma::chi(chi_index, static_cast<int>(n));
    if (invert_flag) f = gamma::invert(f);
    for (std::int64_t m = 1; m <= n; ++m)
      out << (m > 1 ? " " : "") << f.at(m).get_str();
    out << "\n";
    return 0;
  }

  if (*c_verify) {
    SuiteRunner s{out};
    if (suite == "figures") {
      if (!*vn) nmax = 30;
      suite_figures(s, nmax);
    } else if (suite == "theorems") {
      if (!*vn) nmax = 500;
      suite_theorems(s, nmax);
    } else if (suite == "gamma") {
      if (!*vn) nmax = 200;
      suite_gamma(s, nmax, seed);
    } else {
      if (!*vn) nmax = 12;
      suite_oracles(s, err, nmax, qmax, modular, seed);
    }
    out << (s.failures == 0 ? "all checks passed"
                            : std::to_string(s.failures) + " check(s) failed")
        << "\n";
    return s.failures == 0 ? 0 : 2;
  }

  err << "error: no command\n";
  return 1;
}

}  // namespace

}  // namespace ntf::cli
