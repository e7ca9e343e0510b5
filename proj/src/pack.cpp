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

#include "bireshape/pack.hpp"

#include <cstdio>
#include <sstream>

#include "bireshape/errors.hpp"

namespace bireshape {

namespace {

constexpr const char* kMagic = "RESHAPER-PACK v1";

std::string eta_line(const ReshapingSequence& s) {
  std::string out = "eta";
  for (int e : s.eta()) out += " " + std::to_string(e);
  return out + "\n";
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string g_blocks(const Reshaper& r, int offset) {
  std::string out;
  for (std::size_t i = 0; i < r.g.size(); ++i)
    out += "g " + std::to_string(offset + i + 1) + "\n" + format_bi(r.g[i]);
  return out;
}

std::string points_block(const PointSet& P) {
  return "points " + std::to_string(P.size()) + "\n" + format_points(P);
}

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  std::string line(const std::string& what) {
    std::string l;
    if (!std::getline(in_, l)) throw ParseError("pack truncated: expected " + what);
    if (!l.empty() && l.back() == '\r') l.pop_back();
    return l;
  }

  // Next line split into words, first word required to equal tag.
  std::vector<std::string> tagged(const std::string& tag) {
    std::string l = line("'" + tag + "'");
    auto w = words(l);
    if (w.empty() || w[0] != tag) throw ParseError("expected '" + tag + "', got '" + l + "'");
    return w;
  }

  std::string peek_tag() {
    std::streampos pos = in_.tellg();
    std::string l;
    if (!std::getline(in_, l)) {
      in_.clear();
      in_.seekg(pos);
      return "";
    }
    in_.seekg(pos);
    auto w = words(l);
    return w.empty() ? "" : w[0];
  }

  std::istream& stream() { return in_; }

  static std::vector<std::string> words(const std::string& l) {
    std::istringstream ss(l);
    std::vector<std::string> w;
    std::string t;
    while (ss >> t) w.push_back(t);
    return w;
  }

 private:
  std::istream& in_;
};

long long to_ll(const std::string& s) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw ParseError("bad integer '" + s + "'");
  }
  if (pos != s.size() || std::to_string(v) != s) throw ParseError("bad integer '" + s + "'");
  return v;
}

ReshapingSequence read_eta(Reader& r) {
  auto w = r.tagged("eta");
  std::vector<int> eta;
  for (std::size_t i = 1; i < w.size(); ++i) eta.push_back(static_cast<int>(to_ll(w[i])));
  std::string why;
  if (!ReshapingSequence::is_valid(eta, &why)) throw ParseError("bad eta line: " + why);
  return ReshapingSequence(eta);
}

Reshaper read_reshaper(Reader& r, const ReshapingSequence& seq, const Field& F,
                       int offset) {
  Reshaper out{seq, {}};
  for (int i = 1; i <= seq.k(); ++i) {
    auto w = r.tagged("g");
    if (w.size() != 2 || to_ll(w[1]) != offset + i)
      throw ParseError("expected 'g " + std::to_string(offset + i) + "'");
    out.g.push_back(read_bi(F, r.stream()));
  }
  try {
    check_reshaper_shape(out);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
  return out;
}

PointSet read_points_block(Reader& r, const Field& K, long long n) {
  auto w = r.tagged("points");
  if (w.size() != 2 || to_ll(w[1]) != n) throw ParseError("points count does not match n");
  std::vector<Point> pts;
  for (long long i = 0; i < n; ++i) {
    auto pw = Reader::words(r.line("a point"));
    if (pw.size() != 2) throw ParseError("bad point line");
    pts.push_back({K.parse(pw[0]), K.parse(pw[1])});
  }
  return PointSet(K, pts);
}

UniPoly read_uni_line(Reader& r, const std::string& tag, const Field& K) {
  std::string l = r.line("'" + tag + "'");
  if (l.rfind(tag + " ", 0) != 0) throw ParseError("expected '" + tag + "', got '" + l + "'");
  return parse_uni(K, l.substr(tag.size() + 1));
}

}  // namespace

const Field& Pack::field() const {
  switch (task) {
    case Task::kMpeDistinct:
    case Task::kMpeShear: return mpe().points.field();
    case Task::kInterpolate: return interp().points.field();
    case Task::kModComp: return modcomp().M.field();
  }
  throw Error("unknown task");
}

long long Pack::n() const {
  switch (task) {
    case Task::kMpeDistinct:
    case Task::kMpeShear: return static_cast<long long>(mpe().points.size());
    case Task::kInterpolate: return static_cast<long long>(interp().points.size());
    case Task::kModComp: return modcomp().M.deg();
  }
  throw Error("unknown task");
}

int Pack::d() const {
  switch (task) {
    case Task::kMpeDistinct:
    case Task::kMpeShear: return mpe().d;
    case Task::kInterpolate: return interp().d;
    case Task::kModComp: return modcomp().d;
  }
  throw Error("unknown task");
}

std::vector<BalanceReport> Pack::reports() const {
  switch (task) {
    case Task::kMpeDistinct:
    case Task::kMpeShear: return {mpe().report};
    case Task::kInterpolate: return {interp().first_report, interp().second_report};
    case Task::kModComp: return {modcomp().report};
  }
  throw Error("unknown task");
}

std::string task_name(Task t) {
  switch (t) {
    case Task::kMpeDistinct: return "mpe-distinct";
    case Task::kMpeShear: return "mpe-shear";
    case Task::kInterpolate: return "interpolate";
    case Task::kModComp: return "modcomp";
  }
  throw Error("unknown task");
}

Task parse_task(const std::string& s) {
  for (Task t : {Task::kMpeDistinct, Task::kMpeShear, Task::kInterpolate, Task::kModComp})
    if (task_name(t) == s) return t;
  throw ParseError("unknown task '" + s + "'");
}

std::uint64_t points_hash(const PointSet& P) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : format_points(P)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string write_pack(const Pack& pack) {
  const Field& K = pack.field();
  // Largest field the pack's polynomials live in.
  Field L = K;
  if (pack.task == Task::kMpeShear) L = pack.mpe().field();
  if (pack.task == Task::kInterpolate) L = pack.interp().ext;
  std::string s = std::string(kMagic) + "\n";
  s += "field " + std::to_string(K.p());
  if (L.is_extension()) s += " ext " + std::to_string(L.nonresidue());
  s += "\n";
  s += "task " + task_name(pack.task) + "\n";
  s += "n " + std::to_string(pack.n()) + " d " + std::to_string(pack.d()) + "\n";
  switch (pack.task) {
    case Task::kMpeDistinct:
    case Task::kMpeShear: s += eta_line(pack.mpe().reshaper.seq); break;
    case Task::kInterpolate:
      s += eta_line(pack.interp().first.seq);
      s += "k1 " + std::to_string(pack.interp().k1) + "\n";
      s += eta_line(pack.interp().second.seq);
      break;
    case Task::kModComp: s += eta_line(pack.modcomp().reshaper.seq); break;
  }
  if (pack.orient == Orientation::kYX) s += "orient yx\n";
  if (pack.task == Task::kMpeShear)
    s += "shear c " + std::to_string(L.nonresidue()) + " hash " +
         hex64(points_hash(pack.mpe().work)) + "\n";
  switch (pack.task) {
    case Task::kMpeDistinct:
    case Task::kMpeShear:
      s += g_blocks(pack.mpe().reshaper, 0);
      s += points_block(pack.mpe().points);
      break;
    case Task::kInterpolate:
      s += g_blocks(pack.interp().first, 0);
      s += g_blocks(pack.interp().second, pack.interp().k1);
      s += points_block(pack.interp().points);
      break;
    case Task::kModComp:
      s += g_blocks(pack.modcomp().reshaper, 0);
      s += "M " + format_uni(pack.modcomp().M) + "\n";
      s += "A " + format_uni(pack.modcomp().A) + "\n";
      break;
  }
  return s;
}

Pack read_pack(std::istream& in) {
  Reader r(in);
  if (r.line("magic") != kMagic) throw ParseError("not a reshaper pack");
  auto fw = r.tagged("field");
  if (fw.size() != 2 && !(fw.size() == 4 && fw[2] == "ext"))
    throw ParseError("bad field line");
  const long long p = to_ll(fw[1]);
  if (p < 2 || !is_prime_u64(static_cast<u64>(p))) throw ParseError("field modulus is not prime");
  Pack pack;
  auto tw = r.tagged("task");
  if (tw.size() != 2) throw ParseError("bad task line");
  pack.task = parse_task(tw[1]);
  auto nw = r.tagged("n");
  if (nw.size() != 4 || nw[2] != "d") throw ParseError("bad 'n d' line");
  const long long n = to_ll(nw[1]);
  const long long d = to_ll(nw[3]);
  if (n < 1 || d < 1 || d > (1LL << 30)) throw ParseError("bad n or d");

  // mpe-distinct and modcomp instances may live in the extension; the other
  // tasks use it for shearing only.
  Field K, L;
  try {
    K = L = Field::prime(static_cast<u64>(p));
    if (fw.size() == 4) {
      const bool instance_ext =
          pack.task == Task::kMpeDistinct || pack.task == Task::kModComp;
      L = instance_ext ? Field::extension(static_cast<u64>(p), static_cast<u64>(to_ll(fw[3])))
                       : build_quadratic_extension(K);
      if (std::to_string(L.nonresidue()) != fw[3])
        throw ParseError("unexpected extension constant " + fw[3]);
      if (instance_ext) K = L;
    }
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("bad field line: ") + e.what());
  }
  if (pack.task == Task::kMpeShear && !L.is_extension())
    throw ParseError("mpe-shear pack without extension");

  ReshapingSequence s1 = read_eta(r), s2;
  int k1 = 0;
  if (pack.task == Task::kInterpolate) {
    auto kw = r.tagged("k1");
    if (kw.size() != 2) throw ParseError("bad k1 line");
    k1 = static_cast<int>(to_ll(kw[1]));
    if (k1 != s1.k()) throw ParseError("k1 does not match the first eta line");
    s2 = read_eta(r);
  }
  if (r.peek_tag() == "orient") {
    auto ow = r.tagged("orient");
    if (ow.size() != 2 || ow[1] != "yx") throw ParseError("bad orient line");
    pack.orient = Orientation::kYX;
  }
  std::string hash;
  if (pack.task == Task::kMpeShear) {
    auto sw = r.tagged("shear");
    if (sw.size() != 5 || sw[1] != "c" || sw[3] != "hash") throw ParseError("bad shear line");
    if (sw[2] != fw[3]) throw ParseError("shear constant differs from the field line");
    hash = sw[4];
  }
  try {
    switch (pack.task) {
      case Task::kMpeDistinct:
      case Task::kMpeShear: {
        Reshaper g = read_reshaper(r, s1, L, 0);
        PointSet P = read_points_block(r, K, n);
        auto v = pack.task == Task::kMpeShear ? MpeVariant::kShear : MpeVariant::kDistinct;
        MpePlan plan = make_mpe_plan(v, P, static_cast<int>(d), std::move(g));
        if (v == MpeVariant::kShear && hex64(points_hash(plan.work)) != hash)
          throw ParseError("sheared point-set hash mismatch");
        pack.plan = std::move(plan);
        break;
      }
      case Task::kInterpolate: {
        Reshaper g1 = read_reshaper(r, s1, L, 0);
        Reshaper g2 = read_reshaper(r, s2, K, k1);
        PointSet P = read_points_block(r, K, n);
        InterpPlan plan = make_interp_plan(P, static_cast<int>(d), k1, std::move(g1), std::move(g2));
        if (!(plan.ext == L)) throw ParseError("field line does not match the point set");
        pack.plan = std::move(plan);
        break;
      }
      case Task::kModComp: {
        Reshaper g = read_reshaper(r, s1, K, 0);
        UniPoly M = read_uni_line(r, "M", K);
        UniPoly A = read_uni_line(r, "A", K);
        if (M.deg() != n) throw ParseError("deg M does not match n");
        ModCompPlan plan = make_modcomp_plan(M, A, static_cast<int>(d), std::move(g));
        if (!(plan.M == M) || !(plan.A == A)) throw ParseError("M not monic or A not reduced");
        pack.plan = std::move(plan);
        break;
      }
    }
  } catch (const ParseError&) {
    throw;
  } catch (const ContextMismatch& e) {
    throw ParseError(std::string("pack content: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("pack content: ") + e.what());
  }
  std::string rest;
  while (std::getline(in, rest))
    if (!rest.empty() && rest != "\r") throw ParseError("trailing data after pack");
  return pack;
}

Pack read_pack_string(const std::string& text) {
  std::istringstream in(text);
  return read_pack(in);
}

}  // namespace bireshape
