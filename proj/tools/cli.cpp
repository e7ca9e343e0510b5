// Copyright 2026 The bireshape Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "bireshape/errors.hpp"
#include "bireshape/oracle.hpp"

namespace bireshape::cli {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Online-phase input rejected; maps to exit code 3.
class OnlineInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path + "'");
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("cannot write '" + path + "'");
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::uint64_t fnv(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

Field make_field(u64 p, long long ext) {
  if (p < 3 || !is_prime_u64(p)) throw PreconditionError(std::to_string(p) + " is not an odd prime");
  if (ext < 0) return Field::prime(p);
  return Field::extension(p, static_cast<u64>(ext));
}

PointSet swap_xy(const PointSet& P) {
  std::vector<Point> v;
  for (const Point& pt : P.points()) v.push_back({pt.beta, pt.alpha});
  return PointSet(P.field(), v);
}

const PointSet& pack_points(const Pack& pk) {
  return pk.task == Task::kInterpolate ? pk.interp().points : pk.mpe().points;
}

// Points in the caller's coordinates.
PointSet user_points(const Pack& pk) {
  const PointSet& P = pack_points(pk);
  return pk.orient == Orientation::kYX ? swap_xy(P) : P;
}

std::string join_values(const Field& F, const std::vector<Fe>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += F.format(v[i]);
  }
  return s;
}

std::string join(const std::vector<long long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s.empty() ? "-" : s;
}

std::string join(const std::vector<int>& v) {
  return join(std::vector<long long>(v.begin(), v.end()));
}

bool all_balanced(const Pack& pk) {
  for (const auto& r : pk.reports())
    if (!check_balanced(r).balanced) return false;
  return true;
}

void print_report(const Pack& pk, std::ostream& out) {
  out << "task " << task_name(pk.task) << " n " << pk.n() << " d " << pk.d() << "\n";
  long long agg = 0, bound = 0;
  int idx = 0;
  for (const BalanceReport& rep : pk.reports()) {
    ++idx;
    const BalanceVerdict v = check_balanced(rep);
    agg += v.aggregate;
    bound += v.bound;
    out << "reshaper " << idx << " steps " << rep.steps.size() << "\n";
    for (std::size_t i = 0; i < rep.steps.size(); ++i) {
      const BalanceStep& st = rep.steps[i];
      out << "  step " << i + 1 << " eta " << st.eta << " delta " << st.delta << " degx "
          << st.degx << " bound " << st.bound << " slack " << st.slack << "\n";
    }
    out << "  aggregate " << v.aggregate << " <= " << v.bound << "\n";
  }
  out << "balanced: " << (all_balanced(pk) ? "true" : "false") << "\n";
}

void warn_if_unbalanced(const Pack& pk, std::ostream& err) {
  for (const auto& rep : pk.reports())
    for (std::size_t i = 0; i < rep.steps.size(); ++i)
      if (rep.steps[i].slack < 0)
        err << "warning: pack is unbalanced at step " << i + 1 << " (slack "
            << rep.steps[i].slack << "); online cost grows accordingly\n";
}

std::vector<Fe> parse_values(const Field& F, const std::string& text) {
  std::istringstream in(text);
  std::vector<Fe> out;
  std::string tok;
  while (in >> tok) out.push_back(F.parse(tok));
  return out;
}

BiPoly parse_bi_text(const Field& F, const std::string& text) {
  std::istringstream in(text);
  BiPoly f = read_bi(F, in);
  std::string rest;
  while (in >> rest) throw ParseError("trailing data after polynomial");
  return f;
}

std::pair<UniPoly, UniPoly> parse_modcomp_input(const Field& F, const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> lines;
  std::string l;
  while (std::getline(in, l)) {
    if (!l.empty() && l.back() == '\r') l.pop_back();
    if (!l.empty()) lines.push_back(l);
  }
  if (lines.size() != 2) throw ParseError("modcomp input needs two lines: M and A");
  return {parse_uni(F, lines[0]), parse_uni(F, lines[1])};
}

// Online call in the caller's coordinates; throws OnlineInputError on a
// degree or length violation.
std::string run_online(const Pack& pk, const std::string& input, bool verify, bool& ok) {
  const Field& K = pk.field();
  const bool yx = pk.orient == Orientation::kYX;
  ok = true;
  try {
    switch (pk.task) {
      case Task::kMpeDistinct:
      case Task::kMpeShear: {
        BiPoly f = parse_bi_text(K, input);
        std::vector<Fe> v = mpe_online(pk.mpe(), yx ? transpose(f) : f);
        if (verify) ok = v == naive_mpe(f, user_points(pk));
        return join_values(K, v) + "\n";
      }
      case Task::kInterpolate: {
        std::vector<Fe> gamma = parse_values(K, input);
        BiPoly f = interpolate_online(pk.interp(), gamma);
        if (yx) f = transpose(f);
        if (verify) ok = naive_mpe(f, user_points(pk)) == gamma;
        return format_bi(f);
      }
      case Task::kModComp: {
        BiPoly f = parse_bi_text(K, input);
        UniPoly r = modcomp_online(pk.modcomp(), f);
        if (verify) ok = r == naive_modcomp(f, pk.modcomp().M, pk.modcomp().A);
        return join_values(K, r.coeffs()) + "\n";
      }
    }
  } catch (const DegreeError& e) {
    throw OnlineInputError(e.what());
  }
  throw Error("unknown task");
}

Pack precompute_pack(Task task, const Field& F, const std::string& input, int d, bool transpose_in) {
  Pack pk;
  pk.task = task;
  pk.orient = transpose_in ? Orientation::kYX : Orientation::kXY;
  if (task == Task::kModComp) {
    if (transpose_in) throw PreconditionError("--transpose applies to point-set tasks only");
    auto [M, A] = parse_modcomp_input(F, input);
    pk.plan = modcomp_precompute(M, A, d);
    return pk;
  }
  std::istringstream in(input);
  PointSet P = read_points(F, in);
  if (transpose_in) P = swap_xy(P);
  switch (task) {
    case Task::kMpeDistinct: pk.plan = mpe_distinct_precompute(P, d); break;
    case Task::kMpeShear: pk.plan = mpe_shear_precompute(P, d); break;
    case Task::kInterpolate: pk.plan = interpolate_precompute(P, d); break;
    case Task::kModComp: break;
  }
  return pk;
}

// Membership of every reshaper element plus random online checks.
std::string verify_pack(const Pack& pk, int trials, u64 seed) {
  auto vanishes = [](const BiPoly& g, const PointSet& P) {
    for (const Fe& v : naive_mpe(g, P))
      if (!P.field().is_zero(v)) return false;
    return true;
  };
  switch (pk.task) {
    case Task::kMpeDistinct:
    case Task::kMpeShear:
      for (std::size_t i = 0; i < pk.mpe().reshaper.g.size(); ++i)
        if (!vanishes(pk.mpe().reshaper.g[i], pk.mpe().work))
          return "g " + std::to_string(i + 1) + " does not vanish on the points";
      break;
    case Task::kInterpolate:
      for (std::size_t i = 0; i < pk.interp().first.g.size(); ++i)
        if (!vanishes(pk.interp().first.g[i], pk.interp().sheared))
          return "g " + std::to_string(i + 1) + " does not vanish on the sheared points";
      for (std::size_t i = 0; i < pk.interp().second.g.size(); ++i)
        if (!vanishes(pk.interp().second.g[i], pk.interp().points))
          return "g " + std::to_string(pk.interp().k1 + i + 1) + " does not vanish on the points";
      break;
    case Task::kModComp:
      for (std::size_t i = 0; i < pk.modcomp().reshaper.g.size(); ++i)
        if (!naive_modcomp(pk.modcomp().reshaper.g[i], pk.modcomp().M, pk.modcomp().A).is_zero())
          return "g " + std::to_string(i + 1) + " is not in <M, y - A>";
      break;
  }
  const Field& K = pk.field();
  SplitMix64 rng(seed);
  const int d = pk.d();
  const long long n = pk.n();
  for (int t = 0; t < trials; ++t) {
    std::string input;
    if (pk.task == Task::kInterpolate) {
      std::vector<Fe> g;
      for (long long i = 0; i < n; ++i) g.push_back(rng.element(K));
      input = join_values(K, g);
    } else {
      int dy = static_cast<int>(rng.below(d));
      int dx = static_cast<int>(rng.below(2 * n / d + 1));
      if (pk.task == Task::kMpeShear) dx = static_cast<int>(rng.below(d - dy));
      std::vector<UniPoly> rows;
      for (int j = 0; j <= dy; ++j) {
        std::vector<Fe> c(dx + 1);
        for (auto& x : c) x = rng.element(K);
        rows.emplace_back(K, c);
      }
      input = format_bi(BiPoly(K, rows));
    }
    Pack probe = pk;
    probe.orient = Orientation::kXY;
    bool ok = false;
    run_online(probe, input, true, ok);
    if (!ok) return "online result differs from the oracle in trial " + std::to_string(t);
  }
  return "";
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << "\n";
    return kExitIo;
  } catch (const OnlineInputError& e) {
    err << "error: online input: " << e.what() << "\n";
    return kExitOnlineInput;
  } catch (const ReshaperFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const DistinctnessError& e) {
    err << "error: distinctness: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

PointSet random_distinct_x_points(const Field& F, SplitMix64& rng, std::size_t n) {
  if (static_cast<u64>(n) > F.p()) throw PreconditionError("need n <= p for distinct x");
  std::vector<Point> v;
  std::vector<u64> seen;
  while (v.size() < n) {
    Fe a = rng.base_element(F);
    if (std::find(seen.begin(), seen.end(), a.a0) != seen.end()) continue;
    seen.push_back(a.a0);
    v.push_back({a, rng.base_element(F)});
  }
  return PointSet(F, v);
}

UniPoly random_squarefree(const Field& F, SplitMix64& rng, int n) {
  for (;;) {
    std::vector<Fe> c(n + 1);
    for (auto& x : c) x = rng.base_element(F);
    c[n] = F.one();
    UniPoly M(F, c);
    if (n <= 1 || uni_gcd(M, derivative(M)).deg() == 0) return M;
  }
}

std::vector<int> popov_law_prediction(long long n, int m) {
  std::vector<int> out;
  const long long t = n % m;
  for (long long i = 0; i < m; ++i) out.push_back(static_cast<int>(n / m + (i >= m - t ? 1 : 0)));
  return out;
}

int StatsResult::balanced_count() const {
  return static_cast<int>(std::count_if(trials.begin(), trials.end(),
                                        [](const TrialResult& t) { return t.balanced; }));
}

int StatsResult::popov_count() const {
  return static_cast<int>(std::count_if(trials.begin(), trials.end(),
                                        [](const TrialResult& t) { return t.popov_law; }));
}

int StatsResult::popov_checked_count() const {
  return static_cast<int>(std::count_if(trials.begin(), trials.end(),
                                        [](const TrialResult& t) { return t.popov_checked; }));
}

StatsResult balance_stats(const StatsConfig& cfg) {
  if (cfg.mode != "points" && cfg.mode != "modcomp")
    throw PreconditionError("mode must be points or modcomp");
  if (cfg.n < 1) throw PreconditionError("n must be positive");
  if (cfg.trials < 0) throw PreconditionError("trials must be non-negative");
  const Field F = make_field(cfg.p, -1);
  if (static_cast<u64>(cfg.n) > cfg.p) throw PreconditionError("need n <= p");
  const int d = cfg.d > 0 ? cfg.d : static_cast<int>(cfg.n);
  const ReshapingSequence seq = make_sequence(d, 1, 1);
  const std::vector<int> law = popov_law_prediction(cfg.n, cfg.m);
  StatsResult res;
  res.trials.resize(cfg.trials);
  const SplitMix64 root(cfg.seed);

  auto one = [&](int t) {
    SplitMix64 rng = root.split(static_cast<u64>(t));
    TrialResult& tr = res.trials[t];
    try {
      ReshaperBuild b;
      if (cfg.mode == "points") {
        PointSet P = random_distinct_x_points(F, rng, static_cast<std::size_t>(cfg.n));
        b = build_reshaper_pack(P, seq);
        if (cfg.m >= 1 && cfg.m <= cfg.n) {
          tr.popov_checked = true;
          tr.popov_degrees = certificate(gamma_popov_points(P, cfg.m)).row_degrees;
          std::sort(tr.popov_degrees.begin(), tr.popov_degrees.end());
          tr.popov_law = tr.popov_degrees == law;
        }
      } else {
        UniPoly M = random_squarefree(F, rng, static_cast<int>(cfg.n));
        std::vector<Fe> a(cfg.n);
        for (auto& x : a) x = rng.base_element(F);
        b = build_reshaper_pack(M, UniPoly(F, a), seq);
      }
      tr.verdict = check_balanced(b.report);
      tr.balanced = tr.verdict.balanced;
      for (const auto& st : b.report.steps) tr.slacks.push_back(st.slack);
    } catch (const ReshaperFailure& e) {
      tr.failed = true;
      tr.failure = e.what();
    }
  };

  int threads = cfg.threads > 0 ? cfg.threads
                                : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min(threads, std::max(1, cfg.trials));
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mu;
  for (int w = 0; w < threads; ++w)
    pool.emplace_back([&] {
      for (int t; (t = next++) < cfg.trials;) {
        try {
          one(t);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return res;
}

void print_stats(const StatsConfig& cfg, const StatsResult& res, std::ostream& out) {
  const int d = cfg.d > 0 ? cfg.d : static_cast<int>(cfg.n);
  out << "prng " << SplitMix64::kName << " seed " << cfg.seed << "\n";
  out << "mode " << cfg.mode << " n " << cfg.n << " p " << cfg.p << " d " << d << " m "
      << cfg.m << " trials " << cfg.trials << "\n";
  out << "eta " << join(make_sequence(d, 1, 1).eta()) << "\n";
  for (std::size_t t = 0; t < res.trials.size(); ++t) {
    const TrialResult& tr = res.trials[t];
    out << "trial " << t;
    if (tr.failed) {
      out << " failed " << tr.failure << "\n";
      continue;
    }
    out << " balanced " << tr.balanced << " slack " << join(tr.slacks) << " aggregate "
        << tr.verdict.aggregate << "/" << tr.verdict.bound;
    if (tr.popov_checked) out << " popov " << join(tr.popov_degrees) << " law " << tr.popov_law;
    out << "\n";
  }
  const int total = static_cast<int>(res.trials.size());
  auto frac = [](int a, int b) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", b ? static_cast<double>(a) / b : 0.0);
    return std::string(buf) + " (" + std::to_string(a) + "/" + std::to_string(b) + ")";
  };
  int failed = 0;
  for (const auto& tr : res.trials) failed += tr.failed;
  out << "failed " << failed << "\n";
  out << "balanced_fraction " << frac(res.balanced_count(), total) << "\n";
  if (res.popov_checked_count() > 0) {
    out << "popov_law_prediction " << join(popov_law_prediction(cfg.n, cfg.m)) << "\n";
    out << "popov_law_fraction " << frac(res.popov_count(), res.popov_checked_count()) << "\n";
  }
}

std::vector<BenchRow> bench(Task task, const std::vector<long long>& sizes, u64 seed, u64 p,
                            double min_online_s) {
  const Field F = make_field(p, -1);
  std::vector<BenchRow> rows;
  const SplitMix64 root(seed);
  for (std::size_t idx = 0; idx < sizes.size(); ++idx) {
    const long long n = sizes[idx];
    if (n < 1) throw PreconditionError("sizes must be positive");
    SplitMix64 rng = root.split(idx);
    BenchRow row;
    row.n = n;
    row.d = static_cast<int>(std::max(1LL, isqrt(n)));
    Pack pk;
    pk.task = task;
    std::string digest_src;
    auto t0 = std::chrono::steady_clock::now();
    if (task == Task::kModComp) {
      UniPoly M = random_squarefree(F, rng, static_cast<int>(n));
      std::vector<Fe> a(n);
      for (auto& x : a) x = rng.base_element(F);
      UniPoly A(F, a);
      digest_src = format_uni(M) + "\n" + format_uni(A) + "\n";
      t0 = std::chrono::steady_clock::now();
      pk.plan = modcomp_precompute(M, A, row.d);
    } else {
      PointSet P = random_distinct_x_points(F, rng, static_cast<std::size_t>(n));
      if (task == Task::kMpeShear) {
        // Pair up x-coordinates so nu_x = 2.
        std::vector<Point> v = P.points();
        for (std::size_t i = 1; i < v.size(); i += 2) v[i].alpha = v[i - 1].alpha;
        P = PointSet(F, v);
      }
      digest_src = format_points(P);
      t0 = std::chrono::steady_clock::now();
      if (task == Task::kMpeDistinct) pk.plan = mpe_distinct_precompute(P, row.d);
      if (task == Task::kMpeShear) pk.plan = mpe_shear_precompute(P, row.d);
      if (task == Task::kInterpolate)
        pk.plan = interpolate_precompute(P, static_cast<int>(std::max(1LL, isqrt(n))));
    }
    row.precompute_s = seconds_since(t0);
    row.balanced = all_balanced(pk);
    row.digest = hex64(fnv(digest_src));

    // One online input, reused for every timed call.
    BiPoly f(F);
    std::vector<Fe> gamma;
    if (task == Task::kInterpolate) {
      for (long long i = 0; i < n; ++i) gamma.push_back(rng.base_element(F));
    } else {
      int dy = row.d - 1, dx = static_cast<int>(n / row.d);
      if (task == Task::kMpeShear) {
        dy = (row.d - 1) / 2;
        dx = row.d - 1 - dy;
      }
      std::vector<UniPoly> ys;
      for (int j = 0; j <= dy; ++j) {
        std::vector<Fe> c(dx + 1);
        for (auto& x : c) x = rng.base_element(F);
        c.back() = F.one();
        ys.emplace_back(F, c);
      }
      f = BiPoly(F, ys);
    }
    t0 = std::chrono::steady_clock::now();
    do {
      switch (task) {
        case Task::kMpeDistinct:
        case Task::kMpeShear: (void)mpe_online(pk.mpe(), f); break;
        case Task::kInterpolate: (void)interpolate_online(pk.interp(), gamma); break;
        case Task::kModComp: (void)modcomp_online(pk.modcomp(), f); break;
      }
      ++row.online_calls;
    } while (seconds_since(t0) < min_online_s);
    row.online_s = seconds_since(t0) / row.online_calls;
    rows.push_back(row);
  }
  return rows;
}

void print_bench(Task task, const std::vector<BenchRow>& rows, std::ostream& out) {
  out << "task " << task_name(task) << "\n";
  out << "n d precompute_s online_s calls ratio balanced digest\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const BenchRow& r = rows[i];
    char buf[160];
    std::string ratio = "-";
    if (i > 0 && rows[i - 1].online_s > 0) {
      char rb[32];
      std::snprintf(rb, sizeof rb, "%.2f", r.online_s / rows[i - 1].online_s);
      ratio = rb;
    }
    std::snprintf(buf, sizeof buf, "%lld %d %.4f %.6f %d %s %d %s\n", r.n, r.d, r.precompute_s,
                  r.online_s, r.online_calls, ratio.c_str(), r.balanced ? 1 : 0,
                  r.digest.c_str());
    out << buf;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Precomputed bivariate reshaping: evaluation, interpolation, modular composition"};
  app.name("bireshape");
  app.require_subcommand(1);

  std::string task_s, input, out_path, pack_path;
  u64 p = 0;
  long long ext = -1;
  int d = 1;
  bool transpose_in = false, verify = false;

  auto* pre = app.add_subcommand("precompute", "Build a reshaper pack from preinput");
  pre->add_option("--task", task_s, "mpe-distinct | mpe-shear | interpolate | modcomp")->required();
  pre->add_option("--field", p, "Prime modulus")->required();
  pre->add_option("--ext", ext, "Instance over F_p[t]/(t^2 - c) (mpe-distinct, modcomp)");
  pre->add_option("--input", input, "Point file, or M and A lines for modcomp")->required();
  pre->add_option("--d", d, "y-degree bound of online inputs")->required();
  pre->add_option("--out", out_path, "Pack file to write")->required();
  pre->add_flag("--transpose", transpose_in, "Swap x and y before building the pack");

  auto* run = app.add_subcommand("run", "Online phase against a pack");
  run->add_option("--pack", pack_path, "Pack file")->required();
  run->add_option("--input", input, "Polynomial block, or values for interpolate")->required();
  run->add_flag("--verify", verify, "Cross-check against the brute-force oracle");
  run->add_option("--out", out_path, "Write results here instead of standard output");

  StatsConfig sc;
  std::string stats_out;
  auto* stats = app.add_subcommand("balance-stats", "Balancedness over random instances");
  stats->add_option("--n", sc.n, "Instance size")->required();
  stats->add_option("--field", sc.p, "Prime modulus")->required();
  stats->add_option("--d", sc.d, "Sequence start (default n)");
  stats->add_option("--m", sc.m, "Module rank for the Popov row-degree check");
  stats->add_option("--trials", sc.trials, "Number of random instances");
  stats->add_option("--seed", sc.seed, "PRNG seed");
  stats->add_option("--mode", sc.mode, "points | modcomp");
  stats->add_option("--threads", sc.threads, "Worker threads (0 = all cores)");
  stats->add_option("--out", stats_out, "Write the report here");

  std::vector<long long> sizes;
  u64 bench_seed = 1, bench_p = 2013265921;
  std::string bench_out;
  double min_online = 0.2;
  auto* bn = app.add_subcommand("bench", "Precompute and online timings per size");
  bn->add_option("--task", task_s, "Task to time")->required();
  bn->add_option("--sizes", sizes, "Comma-separated sizes")->delimiter(',')->required();
  bn->add_option("--seed", bench_seed, "PRNG seed");
  bn->add_option("--field", bench_p, "NTT-friendly prime");
  bn->add_option("--min-time", min_online, "Minimum online timing window in seconds");
  bn->add_option("--out", bench_out, "Write the table here");

  int vp_trials = 20;
  u64 vp_seed = 1;
  auto* vp = app.add_subcommand("verify-pack", "Check a pack against the oracles");
  vp->add_option("--pack", pack_path, "Pack file")->required();
  vp->add_option("--trials", vp_trials, "Random online checks");
  vp->add_option("--seed", vp_seed, "PRNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }

  return guarded(err, [&]() -> int {
    if (*pre) {
      const Task task = parse_task(task_s);
      if (ext >= 0 && task != Task::kMpeDistinct && task != Task::kModComp)
        throw PreconditionError("--ext applies to mpe-distinct and modcomp only");
      const Field F = make_field(p, ext);
      Pack pk = precompute_pack(task, F, read_file(input), d, transpose_in);
      write_file(out_path, write_pack(pk));
      print_report(pk, out);
      return kExitOk;
    }
    if (*run) {
      Pack pk = read_pack_string(read_file(pack_path));
      warn_if_unbalanced(pk, err);
      bool ok = true;
      std::string result = run_online(pk, read_file(input), verify, ok);
      if (out_path.empty()) out << result;
      else write_file(out_path, result);
      if (verify) out << "verify: " << (ok ? "PASS" : "FAIL") << "\n";
      return ok ? kExitOk : kExitPrecondition;
    }
    if (*stats) {
      StatsResult res = balance_stats(sc);
      std::ostringstream ss;
      print_stats(sc, res, ss);
      if (stats_out.empty()) out << ss.str();
      else write_file(stats_out, ss.str());
      return kExitOk;
    }
    if (*bn) {
      const Task task = parse_task(task_s);
      std::ostringstream ss;
      print_bench(task, bench(task, sizes, bench_seed, bench_p, min_online), ss);
      if (bench_out.empty()) out << ss.str();
      else write_file(bench_out, ss.str());
      return kExitOk;
    }
    if (*vp) {
      Pack pk = read_pack_string(read_file(pack_path));
      print_report(pk, out);
      const std::string why = verify_pack(pk, vp_trials, vp_seed);
      out << (why.empty() ? "PASS" : "FAIL: " + why) << "\n";
      return why.empty() ? kExitOk : kExitPrecondition;
    }
    return kExitPrecondition;
  });
}

}  // namespace bireshape::cli
