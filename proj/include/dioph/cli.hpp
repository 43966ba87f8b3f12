#pragma once

// Command dispatch for the dioph tool. Kept header-side so the test
// suite can drive commands in-process; tools/dioph.cpp is a thin shim.
//
// Output contract: deterministic, exact. Rationals serialize as "p/q"
// in lowest terms (integers as "p"); solution lists are sorted
// lexicographically; families by (d1, d2). Exit codes: 0 = answered
// (including "unsolvable"), 1 = usage or parameter error,
// 2 = verification mismatch.

#include "dioph/numeric.hpp"
#include "dioph/oracle.hpp"
#include "dioph/quadratic.hpp"
#include "dioph/quartic.hpp"

#include <json.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace dioph::cli {

inline constexpr const char* kSchemaVersion = "1";

using json = nlohmann::ordered_json;

inline json triple_json(const IntTriple& t) {
  return json::array({to_string(t.x), to_string(t.y), to_string(t.z)});
}

inline json triple_json(const RatTriple& t) {
  return json::array({to_string(t.x), to_string(t.y), to_string(t.z)});
}

inline std::string triple_text(const IntTriple& t) {
  return to_string(t.x) + " " + to_string(t.y) + " " + to_string(t.z);
}

inline std::string triple_text(const RatTriple& t) {
  return to_string(t.x) + " " + to_string(t.y) + " " + to_string(t.z);
}

inline std::optional<Int> parse_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return std::nullopt;
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
  return Int(s);
}

inline std::optional<Rat> parse_rat(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    auto n = parse_int(s);
    if (!n) return std::nullopt;
    return Rat(*n);
  }
  auto num = parse_int(s.substr(0, slash));
  auto den = parse_int(s.substr(slash + 1));
  if (!num || !den || *den == 0) return std::nullopt;
  return Rat(*num, *den);
}

struct Options {
  std::string format = "json";
  bool orbits = false;
  Int bound = 10;
  Int box = 12;
  unsigned threads = 1;
  std::optional<std::string> rational_params;
};

inline void emit(std::ostream& out, const std::string& command, const Int& n,
                 const json& payload, const std::string& format,
                 const std::string& text) {
  if (format == "text") {
    out << text;
    return;
  }
  json record;
  record["schema_version"] = kSchemaVersion;
  record["command"] = command;
  record["n"] = to_string(n);
  record["payload"] = payload;
  out << record.dump(2) << "\n";
}

inline int usage(std::ostream& err, const std::string& msg) {
  if (!msg.empty()) err << "error: " << msg << "\n";
  err << "usage: dioph [--format json|text] <command> ...\n"
         "  decide <n>                       integer solvability certificate\n"
         "  solve <n> [--orbits]             nonnegative solutions (and orbits)\n"
         "  rational <n>                     rational witness search\n"
         "  quad <n> [--bound B]             quadratic-variant families + solutions\n"
         "  quad <n> --rational n1,n2,t1,t2,r,sign\n"
         "  verify <lo>..<hi> quartic|quadratic [--box B] [--threads T]\n";
  return 1;
}

inline int cmd_decide(const Int& n, const Options& opt, std::ostream& out) {
  const Certificate cert = decide_integer(n);
  json payload;
  std::ostringstream text;
  payload["verdict"] = cert.solvable ? "solvable" : "unsolvable";
  if (cert.solvable) {
    const DivisorQuadruple& w = *cert.witness;
    payload["witness"] = {{"a", to_string(w.a)},
                          {"b", to_string(w.b)},
                          {"c", to_string(w.c)},
                          {"d", to_string(w.d)},
                          {"kind", to_string(w.kind)}};
    const IntTriple t = triple_from_quadruple(w);
    payload["solution"] = triple_json(t);
    text << "solvable\nwitness (a,b,c,d) = (" << to_string(w.a) << ","
         << to_string(w.b) << "," << to_string(w.c) << "," << to_string(w.d)
         << ") [" << to_string(w.kind) << "]\nsolution " << triple_text(t)
         << "\n";
  } else {
    payload["reason"] = to_string(*cert.reason);
    text << "unsolvable (" << to_string(*cert.reason) << ")\n";
  }
  emit(out, "decide", n, payload, opt.format, text.str());
  return 0;
}

inline int cmd_solve(const Int& n, const Options& opt, std::ostream& out) {
  const std::set<IntTriple> canon = enumerate_nonneg(n);
  json payload;
  std::ostringstream text;
  payload["count"] = canon.size();
  json sols = json::array();
  for (const IntTriple& t : canon) sols.push_back(triple_json(t));
  payload["solutions"] = sols;
  text << canon.size() << " nonnegative solution(s)\n";
  for (const IntTriple& t : canon) text << "  " << triple_text(t) << "\n";
  if (opt.orbits) {
    // group by orbit representative
    std::map<IntTriple, std::set<IntTriple>> orbits;
    std::set<IntTriple> all;
    for (const IntTriple& t : canon) {
      const IntTriple rep = canonical_triple(t);
      if (!orbits.count(rep)) orbits[rep] = expand_orbit(rep);
      all.insert(orbits[rep].begin(), orbits[rep].end());
    }
    json jorbits = json::array();
    for (const auto& [rep, members] : orbits) {
      json o;
      o["canonical"] = triple_json(rep);
      o["size"] = members.size();
      json m = json::array();
      for (const IntTriple& t : members) m.push_back(triple_json(t));
      o["members"] = m;
      jorbits.push_back(o);
      text << "orbit " << triple_text(rep) << " size " << members.size() << "\n";
    }
    payload["orbits"] = jorbits;
    payload["total"] = all.size();
    text << "total " << all.size() << " integer solution(s)\n";
  }
  emit(out, "solve", n, payload, opt.format, text.str());
  return 0;
}

inline int cmd_rational(const Int& n, const Options& opt, std::ostream& out) {
  json payload;
  std::ostringstream text;
  if (auto w = rational_witness(n)) {
    payload["found"] = true;
    payload["source"] = "quadruple";
    payload["witness"] = triple_json(w->triple);
    payload["quadruple"] = {{"a", to_string(w->quadruple.a)},
                            {"b", to_string(w->quadruple.b)},
                            {"c", to_string(w->quadruple.c)},
                            {"d", to_string(w->quadruple.d)}};
    text << triple_text(w->triple) << "\nquadruple (a,b,c,d) = ("
         << to_string(w->quadruple.a) << "," << to_string(w->quadruple.b) << ","
         << to_string(w->quadruple.c) << "," << to_string(w->quadruple.d)
         << ")\n";
  } else {
    // fall back to the square / unit families when they apply
    const auto rk = integer_sqrt(n);
    if (n == 1) {
      const auto fam = unit_case(2, 1);
      payload["found"] = true;
      payload["source"] = "unit-family";
      payload["witness"] = triple_json(fam.placements[0]);
      text << triple_text(fam.placements[0]) << "\n";
    } else if (rk.exact && rk.root >= 2) {
      const Int& k = rk.root;
      const auto fam = square_one_zero_rational(k, k, 1, 1, 1);
      payload["found"] = true;
      payload["source"] = "square-family";
      payload["witness"] = triple_json(fam.placements[0]);
      text << triple_text(fam.placements[0]) << "\n";
    } else {
      payload["found"] = false;
      payload["note"] = "no quadruple witness in search space";
      text << "no quadruple witness found (not a nonexistence proof)\n";
    }
  }
  emit(out, "rational", n, payload, opt.format, text.str());
  return 0;
}

inline const char* shape_name(FamilyShape s) {
  switch (s) {
    case FamilyShape::YZero: return "y-zero";
    case FamilyShape::ZZero: return "z-zero";
    case FamilyShape::RhoFamily: return "rho";
    case FamilyShape::XPoints: return "x-points";
  }
  return "?";
}

inline int cmd_quad(const Int& n, const Options& opt, std::ostream& out,
                    std::ostream& err) {
  json payload;
  std::ostringstream text;
  if (opt.rational_params) {
    std::vector<std::string> parts;
    std::stringstream ss(*opt.rational_params);
    for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
    if (parts.size() != 6) return usage(err, "--rational expects n1,n2,t1,t2,r,sign");
    auto n1 = parse_int(parts[0]), n2 = parse_int(parts[1]);
    auto t1 = parse_int(parts[2]), t2 = parse_int(parts[3]);
    auto r = parse_rat(parts[4]);
    if (!n1 || !n2 || !t1 || !t2 || !r)
      return usage(err, "--rational: bad numeric parameter");
    SignChoice sign;
    if (parts[5] == "plus") sign = SignChoice::plus;
    else if (parts[5] == "minus") sign = SignChoice::minus;
    else return usage(err, "--rational: sign must be plus or minus");
    QuadRationalPoint p;
    try {
      p = rational_point(n, *n1, *n2, *t1, *t2, *r, sign);
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << "\n";
      return 1;
    }
    payload["point"] = triple_json(p.triple);
    payload["params"] = {{"n1", to_string(p.n1)}, {"n2", to_string(p.n2)},
                         {"t1", to_string(p.t1)}, {"t2", to_string(p.t2)},
                         {"r", to_string(p.r)},   {"sign", parts[5]}};
    text << triple_text(p.triple) << "\n";
    emit(out, "quad", n, payload, opt.format, text.str());
    return 0;
  }
  if (mod4_excluded(n)) {
    payload["verdict"] = "unsolvable";
    payload["reason"] = "Mod4Filter";
    payload["families"] = json::array();
    payload["solutions"] = json::array();
    text << "unsolvable (n = 2 or 3 mod 4)\n";
    emit(out, "quad", n, payload, opt.format, text.str());
    return 0;
  }
  json jfams = json::array();
  for (const auto& fam : families(n)) {
    json f;
    f["shape"] = shape_name(fam.shape);
    switch (fam.shape) {
      case FamilyShape::XPoints:
        f["k"] = to_string(fam.k);
        text << "x-points: (+-" << to_string(fam.k) << ", 0, 0)\n";
        break;
      case FamilyShape::YZero:
      case FamilyShape::ZZero: {
        f["k"] = to_string(fam.k);
        json ex = json::array();
        for (const Int& m : fam.excluded_t) ex.push_back(to_string(m));
        f["excluded_t"] = ex;
        text << shape_name(fam.shape) << ": x = t^2 +- " << to_string(fam.k);
        if (!fam.excluded_t.empty())
          text << " (minus branch excludes |t| = " << to_string(fam.excluded_t[0]) << ")";
        text << "\n";
        break;
      }
      case FamilyShape::RhoFamily:
        f["d1"] = to_string(fam.d1);
        f["d2"] = to_string(fam.d2);
        f["e"] = to_string(fam.e);
        f["f"] = to_string(fam.f);
        text << "rho-family (d1,d2) = (" << to_string(fam.d1) << ","
             << to_string(fam.d2) << "): e = " << to_string(fam.e)
             << ", f = " << to_string(fam.f) << "\n";
        break;
    }
    jfams.push_back(f);
  }
  payload["families"] = jfams;
  const std::set<IntTriple> sols = enumerate_integer(n, opt.bound);
  json jsols = json::array();
  for (const IntTriple& t : sols) jsols.push_back(triple_json(t));
  payload["bound"] = to_string(opt.bound);
  payload["solutions"] = jsols;
  text << sols.size() << " solution(s) with |y|,|z| <= " << to_string(opt.bound) << "\n";
  for (const IntTriple& t : sols) text << "  " << triple_text(t) << "\n";
  emit(out, "quad", n, payload, opt.format, text.str());
  return 0;
}

inline int cmd_verify(const Int& lo, const Int& hi, CheckMode mode,
                      const Options& opt, std::ostream& out) {
  const EquivalenceReport report = check_equivalence(
      lo, hi, mode, opt.box, opt.threads);
  json payload;
  std::ostringstream text;
  payload["lo"] = to_string(lo);
  payload["hi"] = to_string(hi);
  payload["mode"] = mode == CheckMode::quartic ? "quartic" : "quadratic";
  if (mode == CheckMode::quadratic) payload["box"] = to_string(opt.box);
  payload["mismatch_count"] = report.mismatches.size();
  json jmis = json::array();
  for (const auto& m : report.mismatches) {
    json jm;
    jm["n"] = to_string(m.n);
    json js = json::array(), jo = json::array();
    for (const IntTriple& t : m.solver_set) js.push_back(triple_json(t));
    for (const IntTriple& t : m.oracle_set) jo.push_back(triple_json(t));
    jm["solver"] = js;
    jm["oracle"] = jo;
    jmis.push_back(jm);
    text << "mismatch at n = " << to_string(m.n) << "\n";
  }
  payload["mismatches"] = jmis;
  text << report.mismatches.size() << " mismatch(es) over " << to_string(lo)
       << ".." << to_string(hi) << "\n";
  emit(out, "verify", lo, payload, opt.format, text.str());
  return report.mismatches.empty() ? 0 : 2;
}

// Entry point shared by the binary and the tests.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  Options opt;
  std::vector<std::string> positional;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    auto next = [&](const char* flag) -> std::optional<std::string> {
      if (i + 1 >= args.size()) {
        usage(err, std::string(flag) + " needs a value");
        return std::nullopt;
      }
      return args[++i];
    };
    if (a == "--format") {
      auto v = next("--format");
      if (!v) return 1;
      if (*v != "json" && *v != "text") return usage(err, "--format must be json or text");
      opt.format = *v;
    } else if (a == "--orbits") {
      opt.orbits = true;
    } else if (a == "--bound") {
      auto v = next("--bound");
      if (!v) return 1;
      auto b = parse_int(*v);
      if (!b || *b < 1) return usage(err, "--bound must be a positive integer");
      opt.bound = *b;
    } else if (a == "--box") {
      auto v = next("--box");
      if (!v) return 1;
      auto b = parse_int(*v);
      if (!b || *b < 1) return usage(err, "--box must be a positive integer");
      opt.box = *b;
    } else if (a == "--threads") {
      auto v = next("--threads");
      if (!v) return 1;
      auto t = parse_int(*v);
      if (!t || *t < 1) return usage(err, "--threads must be a positive integer");
      opt.threads = t->convert_to<unsigned>();
    } else if (a == "--rational") {
      auto v = next("--rational");
      if (!v) return 1;
      opt.rational_params = *v;
    } else if (!a.empty() && a[0] == '-') {
      return usage(err, "unknown flag " + a);
    } else {
      positional.push_back(a);
    }
  }
  if (positional.empty()) return usage(err, "missing command");
  const std::string& command = positional[0];

  auto positive_n = [&](std::size_t idx) -> std::optional<Int> {
    if (positional.size() <= idx) {
      usage(err, command + " needs n");
      return std::nullopt;
    }
    auto n = parse_int(positional[idx]);
    if (!n || *n < 1) {
      usage(err, "n must be a positive integer");
      return std::nullopt;
    }
    return n;
  };

  if (command == "decide") {
    auto n = positive_n(1);
    return n ? cmd_decide(*n, opt, out) : 1;
  }
  if (command == "solve") {
    auto n = positive_n(1);
    return n ? cmd_solve(*n, opt, out) : 1;
  }
  if (command == "rational") {
    auto n = positive_n(1);
    return n ? cmd_rational(*n, opt, out) : 1;
  }
  if (command == "quad") {
    auto n = positive_n(1);
    return n ? cmd_quad(*n, opt, out, err) : 1;
  }
  if (command == "verify") {
    if (positional.size() < 3) return usage(err, "verify needs a range and a mode");
    const std::string& range = positional[1];
    const auto dots = range.find("..");
    if (dots == std::string::npos) return usage(err, "range must look like 1..200");
    auto lo = parse_int(range.substr(0, dots));
    auto hi = parse_int(range.substr(dots + 2));
    if (!lo || !hi || *lo < 1 || *hi < *lo) return usage(err, "bad range");
    CheckMode mode;
    if (positional[2] == "quartic") mode = CheckMode::quartic;
    else if (positional[2] == "quadratic") mode = CheckMode::quadratic;
    else return usage(err, "mode must be quartic or quadratic");
    return cmd_verify(*lo, *hi, mode, opt, out);
  }
  return usage(err, "unknown command " + command);
}

}  // namespace dioph::cli
