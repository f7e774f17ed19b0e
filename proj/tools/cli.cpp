#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "cache.hpp"
#include "slicestab/errors.hpp"

namespace slicestab::cli {

namespace {

const std::vector<std::string> kGroups{"duality", "recursion", "wallcross", "oracle"};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

CheckResult make_check(const std::string& name, const std::function<std::vector<std::string>()>& body) {
  CheckResult r;
  r.name = name;
  try {
    const auto fails = body();
    r.passed = fails.empty();
    r.detail = fails.empty() ? "ok" : std::to_string(fails.size()) + " failure(s); first: " + fails.front();
  } catch (const ComputationError& e) {
    r.passed = false;
    r.detail = e.what();
  }
  return r;
}

std::vector<Bundle> all_bundles(int l) {
  std::vector<Bundle> out;
  for (int k = 0; k <= l; ++k) out.push_back({'L', k});
  for (int k = 1; k <= l; ++k) out.push_back({'E', k});
  return out;
}

std::vector<CheckResult> duality_checks(const FixedLocus& locus, const Chamber& ch, const Polarization& pol) {
  return {make_check("duality", [&] { return verify_duality(locus, ch, pol).failures; })};
}

std::vector<CheckResult> recursion_checks(const FixedLocus& locus, const Chamber& ch, const Polarization& pol) {
  std::optional<RestrictionMatrix> m;
  std::vector<CheckResult> out;
  out.push_back(make_check("recursion-invariants", [&] {
    m = build_stab(locus, ch, pol).matrix;
    return check_restriction_invariants(locus, *m);
  }));
  if (!m) return out;
  out.push_back(make_check("reverse-recursion", [&] { return check_reverse_recursion(locus, *m); }));
  out.push_back(make_check("theta-action", [&] {
    std::vector<std::string> fails;
    for (int i = 1; i < locus.spec().length(); ++i)
      if (!theta_action(locus, i, *m).agree) fails.push_back("left and right actions differ for i=" + std::to_string(i));
    return fails;
  }));
  out.push_back(make_check("diagonal-constant", [&] {
    const auto c = diagonal_constants(locus, *m);
    std::vector<std::string> fails;
    for (const auto& x : c)
      if (x != c.front()) fails.push_back("constant varies: " + to_string(x) + " vs " + to_string(c.front()));
    return fails;
  }));
  out.push_back(make_check("closed-form-mod-h2", [&] {
    const auto closed = stab_offdiag_mod_h2(locus, ch, pol);
    std::vector<std::string> fails;
    for (int p = 0; p < locus.size(); ++p)
      for (int q = 0; q < locus.size(); ++q) {
        if (p == q) continue;
        auto it = closed.find({p, q});
        const Polynomial expect = it == closed.end() ? Polynomial(locus.nvars()) : it->second;
        if (truncate_mod_h2(m->entries[p][q]) != expect)
          fails.push_back("pair (" + std::to_string(p) + "," + std::to_string(q) + ")");
      }
    return fails;
  }));
  return out;
}

std::vector<CheckResult> wallcross_checks(const FixedLocus& locus, const Chamber& ch, const Polarization& pol) {
  std::vector<CheckResult> out;
  out.push_back(make_check("wall-crossing", [&] { return check_wall_crossing(locus, ch, pol); }));
  std::optional<ModH2Matrix> m;
  out.push_back(make_check("sigma-sign", [&] {
    m = stab_mod_h2(locus, ch, pol);
    std::vector<std::string> fails;
    const CartanPtr& cd = locus.spec().cartan_ptr();
    for (const auto& e : m->entries) {
      const Root& r = e.adjacency.alpha_form;
      std::set<int> seen;
      for (int side : {1, -1})
        for (std::uint64_t seed : {kWallSeed, std::uint64_t{1}, std::uint64_t{2}, std::uint64_t{3}})
          seen.insert(sigma_sign(locus, e.p, e.q, pol, wall_chamber(cd, r, side, seed)));
      if (seen.size() != 1) fails.push_back("sign depends on the wall chamber for (" + std::to_string(e.p) + "," + std::to_string(e.q) + ")");
    }
    return fails;
  }));
  if (!m) return out;
  out.push_back(make_check("omega-ratio", [&] {
    std::vector<std::string> fails;
    for (const auto& e : m->entries) {
      const Root& r = e.adjacency.alpha_form;
      const RationalFunction prod = omega_ratio(locus, e.p, e.q, r) * omega_ratio(locus, e.q, e.p, r);
      if (prod != RationalFunction(Polynomial::constant(locus.nvars(), 1)))
        fails.push_back("omega ratios not reciprocal for (" + std::to_string(e.p) + "," + std::to_string(e.q) + ")");
    }
    return fails;
  }));
  return out;
}

std::vector<CheckResult> oracle_checks(const FixedLocus& locus, const Chamber& ch, const Polarization& pol) {
  const int l = locus.spec().length();
  std::vector<CheckResult> out;
  if (locus.spec().is_a1()) {
    out.push_back(make_check("mult-localization", [&] {
      const RestrictionMatrix s = stab_matrix(locus, ch, pol);
      std::vector<std::string> fails;
      for (const auto& b : all_bundles(l))
        if (!(mult_matrix(locus, b, ch, pol) == mult_matrix_via_localization(locus, b, s)))
          fails.push_back("bundle " + b.to_string());
      return fails;
    }));
    out.push_back(make_check("general-specialization", [&] {
      const auto closed = stab_offdiag_mod_h2(locus, ch, pol);
      const auto general = stab_mod_h2(locus, ch, pol);
      std::vector<std::string> fails;
      if (closed.size() != general.entries.size()) fails.push_back("different supports");
      for (const auto& e : general.entries) {
        auto it = closed.find({e.p, e.q});
        if (it == closed.end() || it->second != e.value)
          fails.push_back("pair (" + std::to_string(e.p) + "," + std::to_string(e.q) + ")");
      }
      return fails;
    }));
  }
  out.push_back(make_check("cross-oracle", [&] { return check_cross_oracle(locus, stab_mod_h2(locus, ch, pol), pol); }));
  out.push_back(make_check("mult-restrictions", [&] {
    std::vector<std::string> fails;
    for (const auto& b : all_bundles(l))
      for (const auto& f : check_mult_against_restrictions(locus, b, ch, pol)) fails.push_back(b.to_string() + ": " + f);
    return fails;
  }));
  out.push_back(make_check("commutativity", [&] {
    std::vector<OperatorMatrix> ms;
    for (int k = 1; k < l; ++k) ms.push_back(mult_matrix(locus, {'L', k}, ch, pol));
    std::vector<std::string> fails;
    for (size_t a = 0; a < ms.size(); ++a)
      for (size_t b = a + 1; b < ms.size(); ++b)
        if (!(ms[a] * ms[b] == ms[b] * ms[a])) fails.push_back(ms[a].label + " and " + ms[b].label);
    return fails;
  }));
  out.push_back(make_check("simple-spectrum", [&] {
    std::map<std::string, int> seen;
    std::vector<std::string> fails;
    for (int p = 0; p < locus.size(); ++p) {
      std::string key;
      for (int k = 1; k < l; ++k) key += line_bundle_weight(locus.spec(), locus.point(p), k).to_polynomial().to_string() + ";";
      auto [it, fresh] = seen.emplace(key, p);
      if (!fresh) fails.push_back("points " + std::to_string(it->second) + " and " + std::to_string(p) + " share all weights");
    }
    return fails;
  }));
  return out;
}

Json job_spec_json(const JobSpec& job) {
  return Json{{"type", std::string(1, job.type)},
              {"rank", job.rank},
              {"lambda", job.lambda},
              {"mu", job.mu},
              {"chamber", job.chamber},
              {"polarization", job.polarization}};
}

std::string weight_string(const Json& w, int rank) {
  IntVec root = w.at("root").get<IntVec>();
  if (static_cast<int>(root.size()) != rank) throw ValidationError("weight of wrong rank in document");
  std::string s = Polynomial::linear(to_rational(root), w.at("n").get<int>()).to_string();
  const int mult = w.at("mult").get<int>();
  return mult == 1 ? s : s + " ^" + std::to_string(mult);
}

std::string poly_string(const Json& j, int nvars) { return polynomial_from_json(j, nvars).to_string(); }

}  // namespace

std::vector<CheckResult> run_checks(const FixedLocus& locus, const Chamber& ch, const Polarization& pol,
                                    const std::string& group) {
  const bool a1 = locus.spec().is_a1();
  if (group != "all" && std::find(kGroups.begin(), kGroups.end(), group) == kGroups.end())
    throw InvalidSpec("unknown verification group '" + group + "'");
  if (!a1 && (group == "duality" || group == "recursion"))
    throw NotA1("verify " + group + " needs type A1, got " + locus.spec().cartan().name());
  std::vector<CheckResult> out;
  auto append = [&](std::vector<CheckResult> more) { out.insert(out.end(), more.begin(), more.end()); };
  for (const auto& g : kGroups) {
    if (group != "all" && group != g) continue;
    if (!a1 && (g == "duality" || g == "recursion")) {
      out.push_back(CheckResult{g, true, true, "skipped: needs type A1"});
      continue;
    }
    if (g == "duality") append(duality_checks(locus, ch, pol));
    if (g == "recursion") append(recursion_checks(locus, ch, pol));
    if (g == "wallcross") append(wallcross_checks(locus, ch, pol));
    if (g == "oracle") append(oracle_checks(locus, ch, pol));
  }
  return out;
}

Json JobSpec::canonical() const {
  Json j{{"command", command}, {"spec", job_spec_json(*this)}};
  if (command == "mult") j["bundle"] = bundle;
  if (command == "verify") j["check"] = check;
  return j;
}

Chamber parse_chamber(const CartanPtr& cartan, const std::string& text) {
  if (text == "dominant") return Chamber::dominant(cartan);
  if (text == "antidominant") return Chamber::antidominant(cartan);
  RatVec witness;
  for (const auto& part : split(text, ',')) witness.push_back(parse_rational(part));
  if (static_cast<int>(witness.size()) != cartan->rank())
    throw InvalidSpec("chamber witness needs " + std::to_string(cartan->rank()) + " coordinates");
  return Chamber(cartan, witness);
}

Polarization parse_polarization(const FixedLocus& locus, const Chamber& ch, const std::string& text) {
  Polarization pol = repelling_polarization(locus, ch);
  if (text == "repelling") return pol;
  const auto parts = split(text, ',');
  if (static_cast<int>(parts.size()) != locus.size())
    throw InvalidSpec("polarization needs one sign per fixed point (" + std::to_string(locus.size()) + ")");
  for (size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] == "1" || parts[k] == "+1") pol.signs[k] = 1;
    else if (parts[k] == "-1") pol.signs[k] = -1;
    else throw InvalidSpec("polarization signs must be 1 or -1, got '" + parts[k] + "'");
  }
  return pol;
}

Json compute(const JobSpec& job) {
  const CartanPtr cartan = CartanDatum::make(job.type, job.rank);
  const FixedLocus locus(SliceSpec(cartan, job.lambda, Coweight(job.mu.begin(), job.mu.end())));
  Json doc{{"command", job.command}, {"spec", job_spec_json(job)}, {"dimension", locus.dimension()}};
  if (job.command == "fixed-points") {
    Json pts = Json::array();
    for (const auto& p : locus.points()) pts.push_back(to_json(p));
    doc["count"] = locus.size();
    doc["points"] = pts;
    return doc;
  }
  if (job.command == "tangent") {
    Json pts = Json::array();
    for (int x = 0; x < locus.size(); ++x)
      pts.push_back(Json{{"point", to_json(locus.point(x))}, {"weights", to_json(locus.tangent(x))}});
    doc["points"] = pts;
    return doc;
  }
  const Chamber ch = parse_chamber(cartan, job.chamber);
  const Polarization pol = parse_polarization(locus, ch, job.polarization);
  if (job.command == "stab-exact") {
    const StabBuild b = build_stab(locus, ch, pol);
    const auto fails = check_restriction_invariants(locus, b.matrix);
    doc["matrix"] = to_json(b.matrix);
    doc["path_agreements"] = b.path_agreements;
    doc["invariant_failures"] = fails;
    doc["ok"] = fails.empty();
    return doc;
  }
  if (job.command == "stab-mod-h2") {
    doc["matrix"] = to_json(stab_mod_h2(locus, ch, pol));
    return doc;
  }
  if (job.command == "mult") {
    doc["operator"] = to_json(mult_matrix(locus, Bundle::parse(job.bundle), ch, pol));
    return doc;
  }
  if (job.command == "verify") {
    Json checks = Json::array();
    bool ok = true;
    for (const auto& c : run_checks(locus, ch, pol, job.check)) {
      checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"skipped", c.skipped}, {"detail", c.detail}});
      ok = ok && c.passed;
    }
    doc["checks"] = checks;
    doc["ok"] = ok;
    return doc;
  }
  throw InvalidSpec("unknown command '" + job.command + "'");
}

std::string point_label(const Json& point) {
  const auto deltas = point.get<std::vector<IntVec>>();
  std::string out = "(";
  for (size_t k = 0; k < deltas.size(); ++k) {
    if (k) out += deltas[k].size() == 1 ? "," : ";";
    const IntVec& d = deltas[k];
    if (d.size() == 1) {
      out += d[0] == 0 ? "0" : d[0] == 1 ? "w" : d[0] == -1 ? "-w" : std::to_string(d[0]) + "w";
    } else {
      for (size_t c = 0; c < d.size(); ++c) out += (c ? "," : "") + std::to_string(d[c]);
    }
  }
  return out + ")";
}

std::string render_table(const Json& doc) {
  const std::string cmd = doc.at("command");
  const int rank = doc.at("spec").at("rank");
  const int nvars = rank + 1;
  std::ostringstream out;
  auto labels = [&](const Json& pts) {
    std::vector<std::string> ls;
    for (const auto& p : pts) ls.push_back(point_label(p));
    return ls;
  };
  auto dense = [&](const std::vector<std::string>& ls, const std::function<std::string(size_t, size_t)>& cell) {
    out << "p\\q";
    for (const auto& s : ls) out << '\t' << s;
    out << '\n';
    for (size_t p = 0; p < ls.size(); ++p) {
      out << ls[p];
      for (size_t q = 0; q < ls.size(); ++q) out << '\t' << cell(p, q);
      out << '\n';
    }
  };
  if (cmd == "fixed-points") {
    out << "index\tpoint\n";
    size_t k = 0;
    for (const auto& p : doc.at("points")) out << k++ << '\t' << point_label(p) << '\n';
  } else if (cmd == "tangent") {
    out << "index\tpoint\tweights\n";
    size_t k = 0;
    for (const auto& item : doc.at("points")) {
      out << k++ << '\t' << point_label(item.at("point")) << '\t';
      bool first = true;
      for (const auto& w : item.at("weights")) {
        out << (first ? "" : "; ") << weight_string(w, rank);
        first = false;
      }
      out << '\n';
    }
  } else if (cmd == "stab-exact") {
    const Json& m = doc.at("matrix");
    const Json& entries = m.at("entries");
    dense(labels(m.at("points")), [&](size_t p, size_t q) {
      const std::string key = std::to_string(p) + "," + std::to_string(q);
      return entries.contains(key) ? poly_string(entries.at(key), nvars) : std::string("0");
    });
  } else if (cmd == "mult") {
    const Json& m = doc.at("operator");
    const Json& entries = m.at("entries");
    out << "bundle\t" << m.at("bundle").get<std::string>() << '\n';
    dense(labels(m.at("basis")), [&](size_t p, size_t q) { return poly_string(entries.at(p).at(q), nvars); });
  } else if (cmd == "stab-mod-h2") {
    const Json& m = doc.at("matrix");
    const auto ls = labels(m.at("points"));
    out << "p\tq\talpha\tvalue\n";
    for (const auto& e : m.at("entries")) {
      IntVec root = e.at("alpha").get<IntVec>();
      out << ls.at(e.at("p").get<size_t>()) << '\t' << ls.at(e.at("q").get<size_t>()) << '\t'
          << Polynomial::linear(to_rational(root), 0).to_string() << '\t' << poly_string(e.at("value"), nvars) << '\n';
    }
  } else if (cmd == "verify") {
    out << "check\tstatus\tdetail\n";
    for (const auto& c : doc.at("checks")) {
      const char* status = c.at("skipped").get<bool>() ? "SKIP" : c.at("passed").get<bool>() ? "PASS" : "FAIL";
      out << c.at("name").get<std::string>() << '\t' << status << '\t' << c.at("detail").get<std::string>() << '\n';
    }
  } else {
    throw InvalidSpec("no table layout for command '" + cmd + "'");
  }
  return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fixed points, stable envelopes and divisor multiplication for slices in affine Grassmannians",
               "slicestab"};
  app.require_subcommand(1);
  JobSpec job;
  std::string type_text;
  bool no_cache = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--type", type_text, "Cartan type letter (A-G)")->required();
    sub->add_option("--rank", job.rank, "Rank")->required();
    sub->add_option("--lambda", job.lambda, "Fundamental coweight indices, comma separated")
        ->required()
        ->delimiter(',');
    sub->add_option("--mu", job.mu, "Coordinates of mu in the fundamental coweight basis, comma separated")
        ->required()
        ->delimiter(',');
    sub->add_option("--chamber", job.chamber, "dominant, antidominant or a rational witness vector");
    sub->add_option("--polarization", job.polarization, "repelling or one sign per fixed point");
    sub->add_option("--format", job.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--out", job.out, "Write the output to this file");
    sub->add_flag("--no-cache", no_cache, "Neither read nor write the result cache");
  };
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"fixed-points", "List torus-fixed points"},
           {"tangent", "Tangent weights at every fixed point"},
           {"stab-exact", "Exact stable envelope restrictions (type A1)"},
           {"stab-mod-h2", "Off-diagonal stable envelope restrictions mod h^2"},
           {"mult", "Classical multiplication by a tautological divisor"},
           {"verify", "Run verification checks"}}) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub);
    if (name == "mult") sub->add_option("--bundle", job.bundle, "L<k> or E<k>")->required();
    if (name == "verify")
      sub->add_option("check", job.check, "duality, recursion, wallcross, oracle or all")
          ->required()
          ->check(CLI::IsMember({"duality", "recursion", "wallcross", "oracle", "all"}));
  }

  std::vector<const char*> argv{"slicestab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  job.command = app.get_subcommands().front()->get_name();
  job.use_cache = !no_cache;

  try {
    if (type_text.size() != 1) throw InvalidSpec("--type must be a single letter");
    job.type = type_text[0];
    const std::string key = sha256_hex(job.canonical().dump());
    const ResultCache cache(default_cache_dir());
    std::optional<Json> doc;
    if (job.use_cache)
      if (auto hit = cache.load(key)) {
        try {
          doc = Json::parse(*hit);
        } catch (const nlohmann::json::exception&) {
          doc.reset();
        }
      }
    if (!doc) {
      doc = compute(job);
      if (job.use_cache && !cache.store(key, doc->dump()))
        err << "warning: could not write cache entry in " << cache.dir() << '\n';
    }
    const std::string text = job.format == "table" ? render_table(*doc) : doc->dump(2) + "\n";
    if (job.out.empty()) {
      out << text;
    } else {
      std::ofstream file(job.out, std::ios::binary | std::ios::trunc);
      if (!file || !(file << text)) throw std::runtime_error("cannot write " + job.out);
    }
    if (!doc->value("ok", true)) {
      err << "verification failed\n";
      return 3;
    }
    return 0;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ComputationError& e) {
    err << "computation error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace slicestab::cli
