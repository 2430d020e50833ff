// Copyright 2026 The iprob Authors.
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

#include "iprob/query.hpp"

#include <algorithm>
#include <sstream>

#include "iprob/collection.hpp"
#include "iprob/complementation.hpp"
#include "iprob/conditioning.hpp"
#include "iprob/distribution.hpp"
#include "iprob/error.hpp"
#include "iprob/interval_measure.hpp"
#include "iprob/models.hpp"
#include "json.hpp"

namespace iprob {
namespace {

using nlohmann::json;

json to_json(const Rational& r) { return json{{"exact", r.str()}, {"decimal", r.decimal()}}; }

json to_json(const Interval& q) {
  return json{{"lo", q.lo().str()},
              {"hi", q.hi().str()},
              {"lo_decimal", q.lo().decimal()},
              {"hi_decimal", q.hi().decimal()},
              {"text", q.str()}};
}

json to_json(const Event& e) { return json{{"labels", e.labels()}, {"text", e.str()}}; }

std::string interval_line(const Interval& q) { return q.str() + "  ~ " + q.percent_str(); }

std::string yes_no(bool b) { return b ? "true" : "false"; }

QueryResult make(std::string kind, const json& payload, std::string text) {
  return QueryResult{std::move(kind), payload.dump(), std::move(text)};
}

std::vector<Rational> parse_csv(const std::string& text, const char* what) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      out.push_back(Rational::parse(item));
    } catch (const Error& e) {
      throw Error(e.code(), std::string(what) + ": " + e.what());
    }
  }
  if (out.empty()) throw Error(ErrorCode::kInvalidArgument, std::string(what) + ": empty list");
  return out;
}

class Options {
 public:
  Options(const Scenario* s, const Query& q) : s_(s), q_(q) {}

  std::vector<std::string> all(const std::string& key) const {
    std::vector<std::string> out;
    for (const auto& [k, v] : q_.options) {
      if (k == key) out.push_back(v);
    }
    return out;
  }
  std::optional<std::string> get(const std::string& key) const {
    const auto v = all(key);
    if (v.size() > 1) throw Error(ErrorCode::kInvalidArgument, "option --" + key + " given more than once");
    if (v.empty()) return std::nullopt;
    return v.front();
  }
  std::string need(const std::string& key) const {
    auto v = get(key);
    if (!v) throw Error(ErrorCode::kInvalidArgument, q_.command + " needs --" + key);
    return *v;
  }

  const Scenario& scenario() const { return *s_; }

  const ProbMeasure& measure() const {
    if (auto name = get("measure")) return s_->measure(*name);
    if (s_->measures.size() == 1) return s_->measures.begin()->second;
    throw Error(ErrorCode::kInvalidArgument, q_.command + " needs --measure");
  }
  const Partition& partition() const { return s_->partition(need("partition")); }
  const Event& event(const std::string& key = "event") const { return s_->event(need(key)); }
  const RandomVariable& rv() const { return s_->random_variable(need("rv")); }

  // --family, or the indicator family of --partition.
  UncertaintyFamily family() const {
    const auto f = get("family");
    const auto z = get("partition");
    if (f && z) throw Error(ErrorCode::kInvalidArgument, "give either --family or --partition, not both");
    if (f) return s_->family(*f);
    if (z) return UncertaintyFamily::partition_indicator(s_->partition(*z));
    throw Error(ErrorCode::kInvalidArgument, q_.command + " needs --family or --partition");
  }

 private:
  const Scenario* s_;
  const Query& q_;
};

QueryResult cmd_measure(const Options& o) {
  const Event& h = o.event();
  const Interval q = interval_measure(o.measure(), o.family(), h);
  return make("interval", to_json(q), "Q(" + h.str() + ") = " + interval_line(q));
}

QueryResult cmd_condition(const Options& o) {
  const Event& a = o.event("event-a");
  const Event& h = o.event("given");
  const Interval q = conditional(o.measure(), o.family(), a, h);
  return make("interval", to_json(q), "Q(" + a.str() + " | " + h.str() + ") = " + interval_line(q));
}

QueryResult cmd_independent(const Options& o) {
  const Event& a = o.event("event-a");
  const Event& h = o.event("given");
  const ProbMeasure& p = o.measure();
  const UncertaintyFamily y = o.family();
  const Interval c = conditional(p, y, a, h);
  const Interval u = interval_measure(p, y, a);
  const bool ind = c == u;
  json j{{"independent", ind}, {"conditional", to_json(c)}, {"unconditional", to_json(u)}};
  std::string text = yes_no(ind) + "\n  Q(" + a.str() + " | " + h.str() + ") = " + c.str() + "\n  Q(" +
                     a.str() + ") = " + u.str();
  return make("boolean", j, text);
}

QueryResult cmd_psi(const Options& o, bool uncertainty) {
  const Event& h = o.event();
  const Partition& z = o.partition();
  const Event e = uncertainty ? uncertainty_set(h, z) : psi(h, z);
  return make("event", to_json(e), e.str());
}

json witness_json(const AxiomViolation& v) {
  json j{{"condition", std::string(1, v.condition)}, {"h", v.h.str()}};
  if (v.k) j["k"] = v.k->str();
  return j;
}

QueryResult cmd_lattice_check(const Options& o) {
  const Partition& z = o.partition();
  const auto weak = verify_weak_complementation(ComplementationTable::from_partition(z));
  const auto lat = lattice_axiom_report(z);
  json j{{"weak_complementation", weak.is_weak},
         {"regular", weak.is_regular},
         {"complemented", lat.complemented},
         {"distributive", lat.distributive},
         {"empty_is_minimum", lat.empty_is_minimum},
         {"omega_is_maximum", lat.omega_is_maximum}};
  std::ostringstream t;
  t << "weak complementation: " << yes_no(weak.is_weak) << "\nregular: " << yes_no(weak.is_regular)
    << "\ncomplemented: " << yes_no(lat.complemented) << "\ndistributive: " << yes_no(lat.distributive);
  if (lat.witness) {
    j["distributivity_witness"] = {lat.witness->h.str(), lat.witness->k.str(), lat.witness->l.str()};
    t << " (witness H=" << lat.witness->h.str() << " K=" << lat.witness->k.str() << " L=" << lat.witness->l.str()
      << ")";
  }
  t << "\nempty is minimum: " << yes_no(lat.empty_is_minimum) << "\nomega is maximum: " << yes_no(lat.omega_is_maximum);
  if (!weak.witnesses.empty()) {
    j["violations"] = json::array();
    for (const auto& v : weak.witnesses) j["violations"].push_back(witness_json(v));
  }
  return make("report", j, t.str());
}

QueryResult cmd_characterize(const Options& o) {
  const ProbMeasure& p = o.measure();
  const auto table = build_table(p, o.family());
  const auto form = characterize_partition_form(table);
  json j{{"partition_form", form.has_value()}};
  std::string text = "partition form: " + yes_no(form.has_value());
  if (form) {
    json blocks = json::array();
    for (const auto& b : form->partition.blocks()) blocks.push_back(b.labels());
    json w = json::object();
    for (std::size_t i = 0; i < p.space()->size(); ++i) w[p.space()->label(i)] = form->measure.weight(i).str();
    j["blocks"] = blocks;
    j["measure"] = w;
    j["non_unique"] = form->non_unique;
    text += "\nblocks: " + form->partition.str();
    if (form->non_unique) text += "\nnote: a block has zero mass; the partition is not unique";
  }
  return make("report", j, text);
}

QueryResult cmd_family_check(const Options& o) {
  const ProbMeasure& p = o.measure();
  const auto table = build_table(p, o.family());
  const bool cond = family_form_condition(table);
  json j{{"condition", cond}};
  std::string text = "width superadditivity: " + yes_no(cond);
  if (cond) {
    const auto rebuilt = reconstruct_family(table);
    const bool round_trip = build_table(table.lower_measure(), rebuilt) == table;
    const auto check = check_family(rebuilt);
    j["round_trip"] = round_trip;
    j["reconstruction_bounded"] = check.bounded;
    j["reconstruction_non_increasing"] = check.non_increasing;
    text += "\nreconstruction reproduces table: " + yes_no(round_trip) +
            "\nreconstruction bounded by 1: " + yes_no(check.bounded) +
            "\nreconstruction non-increasing: " + yes_no(check.non_increasing);
  }
  return make("report", j, text);
}

QueryResult cmd_cdf(const Options& o) {
  const ProbMeasure& p = o.measure();
  const UncertaintyFamily y = o.family();
  const RandomVariable& x = o.rv();
  if (auto t = o.get("t")) {
    const Rational tv = Rational::parse(*t);
    const Interval q = interval_cdf(p, y, x, tv);
    return make("interval", to_json(q), "F(" + tv.str() + ") = " + interval_line(q));
  }
  json rows = json::array();
  std::string text = "t\tF(t)";
  for (const auto& t : threshold_set({x})) {
    const Interval q = interval_cdf(p, y, x, t);
    json r = to_json(q);
    r["t"] = t.str();
    rows.push_back(r);
    text += "\n" + t.str() + "\t" + interval_line(q);
  }
  return make("table", rows, text);
}

QueryResult cmd_law(const Options& o) {
  const auto values = parse_csv(o.need("values"), "--values");
  const Interval q = pushforward_law(o.measure(), o.partition(), o.rv(), values);
  return make("interval", to_json(q), interval_line(q));
}

QueryResult cmd_dominates(const Options& o) {
  const auto names = o.all("rv");
  if (names.size() != 2) throw Error(ErrorCode::kInvalidArgument, "dominates needs exactly two --rv");
  const RandomVariable& x1 = o.scenario().random_variable(names[0]);
  const RandomVariable& x2 = o.scenario().random_variable(names[1]);
  const ProbMeasure& p = o.measure();
  const UncertaintyFamily y = o.family();
  const bool fwd = dominates(p, y, x1, x2);
  const bool back = dominates(p, y, x2, x1);
  json j{{"dominates", fwd}, {"reverse", back}};
  return make("boolean", j,
              names[0] + " dominates " + names[1] + ": " + yes_no(fwd) + "\n" + names[1] + " dominates " +
                  names[0] + ": " + yes_no(back));
}

MeasureCollection collection_of(const Options& o, const Scenario& s) {
  // Families in the order given; --partition names are read after --family.
  std::vector<UncertaintyFamily> fams;
  for (const auto& f : o.all("family")) fams.push_back(s.family(f));
  for (const auto& z : o.all("partition")) fams.push_back(UncertaintyFamily::partition_indicator(s.partition(z)));
  if (fams.empty()) throw Error(ErrorCode::kInvalidArgument, "aggregate needs --family or --partition members");
  std::vector<const ProbMeasure*> ps;
  for (const auto& m : o.all("measure")) ps.push_back(&s.measure(m));
  if (ps.empty()) ps.push_back(&o.measure());
  if (ps.size() != 1 && ps.size() != fams.size()) {
    throw Error(ErrorCode::kInvalidArgument, "aggregate needs one --measure or one per member");
  }
  std::vector<CollectionMember> members;
  for (std::size_t j = 0; j < fams.size(); ++j) members.push_back({*ps[ps.size() == 1 ? 0 : j], fams[j]});
  return MeasureCollection(std::move(members));
}

QueryResult cmd_aggregate(const Options& o, const Query& q) {
  const MeasureCollection c = collection_of(o, o.scenario());
  const Event& h = o.event();
  if (q.mode == "tilde" || q.mode == "hat") {
    const Interval r = q.mode == "tilde" ? envelope(c, h) : pooled_envelope(c, h);
    return make("interval", to_json(r), q.mode + "(" + h.str() + ") = " + interval_line(r));
  }
  if (q.mode == "delta") {
    const Coherence co = coherence(c, h);
    json j = to_json(co.delta);
    j["defaulted_members"] = co.defaulted;
    std::string text = "delta(" + h.str() + ") = " + co.delta.str() + "  ~ " + co.delta.decimal();
    for (auto m : co.defaulted) text += "\nnote: member " + std::to_string(m) + " has no pooled uncertainty; term set to 0";
    return make("rational", j, text);
  }
  throw Error(ErrorCode::kInvalidArgument, "aggregate mode must be tilde, hat or delta");
}

json identity_json(const IdentityCheck& c) {
  return json{{"formula", c.formula.str()}, {"direct", c.direct.str()}, {"holds", c.holds()}};
}

json containment_json(const Containment& c) {
  return json{{"smaller", c.smaller.str()}, {"larger", c.larger.str()}, {"holds", c.holds}, {"strict", c.strict}};
}

QueryResult cmd_demorgan(const Options& o) {
  const auto names = o.all("event");
  if (names.size() != 2) throw Error(ErrorCode::kInvalidArgument, "demorgan needs exactly two --event");
  const Event& h = o.scenario().event(names[0]);
  const Event& k = o.scenario().event(names[1]);
  const auto r = de_morgan_report(h, k, o.partition());
  json j{{"psi_of_union", identity_json(r.psi_of_union)},
         {"intersection_of_psi", identity_json(r.intersection_of_psi)},
         {"psi_of_intersection", identity_json(r.psi_of_intersection)},
         {"union_of_psi", identity_json(r.union_of_psi)},
         {"meet_inside_union", containment_json(r.meet_inside_union)},
         {"intersection_inside_join", containment_json(r.intersection_inside_join)}};
  std::ostringstream t;
  auto id = [&](const char* name, const IdentityCheck& c) {
    t << name << " = " << c.direct.str() << (c.holds() ? "" : "  (formula disagrees: " + c.formula.str() + ")") << "\n";
  };
  auto ct = [&](const char* name, const Containment& c) {
    t << name << ": " << c.smaller.str() << " <= " << c.larger.str() << "  " << yes_no(c.holds)
      << (c.strict ? " (strict)" : "") << "\n";
  };
  id("psi(H u K)", r.psi_of_union);
  id("psi(H) n psi(K)", r.intersection_of_psi);
  id("psi(H n K)", r.psi_of_intersection);
  id("psi(H) u psi(K)", r.union_of_psi);
  ct("psi(H) n psi(K) inside psi(H u K)", r.meet_inside_union);
  ct("psi(H n K) inside psi(H) u psi(K)", r.intersection_inside_join);
  std::string text = t.str();
  text.pop_back();
  return make("report", j, text);
}

}  // namespace

const std::vector<std::string>& query_commands() {
  static const std::vector<std::string> kCommands = {
      "measure", "condition",  "independent", "psi",       "uncertainty", "lattice-check", "characterize",
      "prop14",  "family-check", "cdf",       "law",       "dominates",   "aggregate",     "demorgan",
      "demo"};
  return kCommands;
}

QueryResult demo_ipcc(const std::optional<std::vector<Rational>>& weights) {
  const IpccModel m = weights ? ipcc_model(*weights) : ipcc_model();
  const auto y = UncertaintyFamily::partition_indicator(m.z);
  json rows = json::array();
  std::ostringstream t;
  t << "Likelihood scale (exact; percentages approximate)\n";
  for (std::size_t n = 0; n < m.h.size(); ++n) {
    const Interval q = interval_measure(m.p, y, m.h[n]);
    json r = to_json(q);
    r["event"] = "H_" + std::to_string(n);
    r["percent"] = q.percent_str();
    rows.push_back(r);
    t << "H_" << n << "  " << q.percent_str() << "  exact " << q.str() << "\n";
  }
  json cond = json::array();
  t << "\nConditional Q(H_m | H_n), m < n\n";
  for (std::size_t n = 0; n < m.h.size(); ++n) {
    for (std::size_t k = 0; k < n; ++k) {
      const Interval q = conditional(m.p, y, m.h[k], m.h[n]);
      json r = to_json(q);
      r["m"] = k;
      r["n"] = n;
      cond.push_back(r);
      t << "H_" << k << " | H_" << n << "  " << q.str() << "  ~ " << q.percent_str() << "\n";
    }
  }
  std::string text = t.str();
  text.pop_back();
  return make("table", json{{"intervals", rows}, {"conditionals", cond}}, text);
}

QueryResult demo_umbrella(const std::optional<std::vector<Rational>>& weights) {
  const UmbrellaModel m = weights ? umbrella_model(*weights) : umbrella_model();
  const auto y = UncertaintyFamily::partition_indicator(m.z);
  std::ostringstream t;
  json intervals = json::array();
  t << "Interval measures, Z = " << m.z.str() << "\n";
  for (const Event& e : {m.w01, m.w10, m.w00, m.w11, m.w00 | m.w11}) {
    const Interval q = interval_measure(m.p, y, e);
    json r = to_json(q);
    r["event"] = e.str();
    intervals.push_back(r);
    t << "Q(" << e.str() << ") = " << interval_line(q) << "\n";
  }
  json conds = json::array();
  t << "\nConditionals given " << m.w10.str() << "\n";
  for (const Event& a : {m.w11, m.w00, m.w00 | m.w11}) {
    const Interval q = conditional(m.p, y, a, m.w10);
    json r = to_json(q);
    r["event"] = a.str();
    r["given"] = m.w10.str();
    conds.push_back(r);
    t << "Q(" << a.str() << " | " << m.w10.str() << ") = " << interval_line(q) << "\n";
  }
  const MeasureCollection c({{m.p, y}, {m.p, UncertaintyFamily::partition_indicator(m.z_alt)}});
  const Interval tilde = envelope(c, m.w10);
  const Interval hat = pooled_envelope(c, m.w10);
  const Coherence co = coherence(c, m.w10);
  t << "\nCollection {Z, Z'} with Z' = " << m.z_alt.str() << "\n";
  t << "tilde(" << m.w10.str() << ") = " << interval_line(tilde) << "\n";
  t << "hat(" << m.w10.str() << ") = " << interval_line(hat) << "\n";
  t << "delta(" << m.w10.str() << ") = " << co.delta.str() << "  ~ " << co.delta.decimal();
  json j{{"intervals", intervals},
         {"conditionals", conds},
         {"tilde", to_json(tilde)},
         {"hat", to_json(hat)},
         {"delta", to_json(co.delta)}};
  return make("report", j, t.str());
}

QueryResult run_query(const Scenario* scenario, const Query& query) {
  const auto& cmd = query.command;
  if (cmd == "demo") {
    std::optional<std::vector<Rational>> w;
    for (const auto& [k, v] : query.options) {
      if (k == "weights") w = parse_csv(v, "--weights");
    }
    if (query.mode == "ipcc") return demo_ipcc(w);
    if (query.mode == "umbrella") return demo_umbrella(w);
    throw Error(ErrorCode::kInvalidArgument, "unknown demo \"" + query.mode + "\"; expected ipcc or umbrella");
  }
  const auto& cmds = query_commands();
  if (std::find(cmds.begin(), cmds.end(), cmd) == cmds.end()) {
    throw Error(ErrorCode::kInvalidArgument, "unknown command \"" + cmd + "\"");
  }
  if (!scenario) throw Error(ErrorCode::kInvalidArgument, cmd + " needs a scenario");
  const Options o(scenario, query);
  if (cmd == "measure") return cmd_measure(o);
  if (cmd == "condition") return cmd_condition(o);
  if (cmd == "independent") return cmd_independent(o);
  if (cmd == "psi") return cmd_psi(o, false);
  if (cmd == "uncertainty") return cmd_psi(o, true);
  if (cmd == "lattice-check") return cmd_lattice_check(o);
  if (cmd == "characterize") return cmd_characterize(o);
  if (cmd == "prop14" || cmd == "family-check") return cmd_family_check(o);
  if (cmd == "cdf") return cmd_cdf(o);
  if (cmd == "law") return cmd_law(o);
  if (cmd == "dominates") return cmd_dominates(o);
  if (cmd == "aggregate") return cmd_aggregate(o, query);
  return cmd_demorgan(o);
}

}  // namespace iprob
