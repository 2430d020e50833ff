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

#include "iprob/scenario.hpp"

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "iprob/error.hpp"
#include "json.hpp"

namespace iprob {
namespace {

using nlohmann::json;

[[noreturn]] void fail(ErrorCode code, const std::string& path, const std::string& msg) {
  throw Error(code, path + ": " + msg);
}

template <typename F>
auto at_path(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

const json& require_object(const json& v, const std::string& path) {
  if (!v.is_object()) fail(ErrorCode::kValidation, path, "expected an object");
  return v;
}

const json& require_array(const json& v, const std::string& path) {
  if (!v.is_array()) fail(ErrorCode::kValidation, path, "expected an array");
  return v;
}

const std::string& require_string(const json& v, const std::string& path) {
  if (!v.is_string()) fail(ErrorCode::kValidation, path, "expected a string");
  return v.get_ref<const std::string&>();
}

Rational read_rational(const json& v, const std::string& path) {
  if (v.is_number_float()) {
    fail(ErrorCode::kParse, path, "floating-point numbers are not accepted; quote the value as \"p/q\" or a decimal string");
  }
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return at_path(path, [&] { return Rational::parse(v.get_ref<const std::string&>()); });
  fail(ErrorCode::kValidation, path, "expected a rational string");
}

std::vector<std::string> read_labels(const json& v, const std::string& path) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < require_array(v, path).size(); ++i) {
    out.push_back(require_string(v[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::size_t label_index(const SpacePtr& space, const std::string& label, const std::string& path) {
  const auto i = space->index_of(label);
  if (!i) fail(ErrorCode::kNotFound, path, "unknown outcome \"" + label + "\"");
  return *i;
}

Event event_from_key(const SpacePtr& space, const std::string& key) {
  std::vector<std::string> labels;
  std::stringstream ss(key);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b != std::string::npos) labels.push_back(item.substr(b, e - b + 1));
  }
  return Event::of(space, labels);
}

json parse_document(std::string_view text) {
  // Frame per open object: keys seen so far and the current key.
  std::vector<std::pair<std::set<std::string>, std::string>> frames;
  std::optional<std::string> duplicate;
  json::parser_callback_t cb = [&](int, json::parse_event_t ev, json& parsed) {
    switch (ev) {
      case json::parse_event_t::object_start:
        frames.emplace_back();
        break;
      case json::parse_event_t::object_end:
        if (!frames.empty()) frames.pop_back();
        break;
      case json::parse_event_t::key: {
        const auto& k = parsed.get_ref<const std::string&>();
        frames.back().second = k;
        if (!frames.back().first.insert(k).second && !duplicate) {
          std::string path;
          for (const auto& f : frames) path += (path.empty() ? "" : ".") + f.second;
          duplicate = path;
        }
        break;
      }
      default:
        break;
    }
    return true;
  };
  json doc;
  try {
    doc = json::parse(text.begin(), text.end(), cb);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("malformed JSON: ") + e.what());
  }
  if (duplicate) fail(ErrorCode::kValidation, *duplicate, "duplicate name");
  return doc;
}

UncertaintyFamily build_family(const Scenario& s, const json& d, const std::string& path) {
  require_object(d, path);
  if (!d.contains("kind")) fail(ErrorCode::kValidation, path, "missing \"kind\"");
  const std::string& kind = require_string(d["kind"], path + ".kind");
  auto partition_of = [&]() -> const Partition& {
    if (!d.contains("partition")) fail(ErrorCode::kValidation, path, "missing \"partition\"");
    const std::string& name = require_string(d["partition"], path + ".partition");
    return at_path(path + ".partition", [&]() -> const Partition& { return s.partition(name); });
  };
  if (kind == "partition") return UncertaintyFamily::partition_indicator(partition_of());
  if (kind == "scaled") {
    if (!d.contains("r")) fail(ErrorCode::kValidation, path, "missing \"r\"");
    const Rational r = read_rational(d["r"], path + ".r");
    return at_path(path + ".r", [&] { return UncertaintyFamily::scaled_complement(s.space, r); });
  }
  if (kind == "alpha") {
    const Partition& k = partition_of();
    const std::string rule = d.contains("rule") ? require_string(d["rule"], path + ".rule") : "constant";
    if (rule != "constant" && rule != "disjoint") {
      fail(ErrorCode::kValidation, path + ".rule", "unknown rule \"" + rule + "\"; expected constant or disjoint");
    }
    if (!d.contains("weights")) fail(ErrorCode::kValidation, path, "missing \"weights\"");
    const json& wj = require_array(d["weights"], path + ".weights");
    if (wj.size() != k.block_count()) {
      fail(ErrorCode::kValidation, path + ".weights",
           "expected " + std::to_string(k.block_count()) + " weights, one per block");
    }
    std::vector<Rational> w;
    for (std::size_t i = 0; i < wj.size(); ++i) {
      w.push_back(read_rational(wj[i], path + ".weights[" + std::to_string(i) + "]"));
    }
    const bool disjoint = rule == "disjoint";
    std::vector<std::uint64_t> masks;
    for (const auto& b : k.blocks()) masks.push_back(b.mask());
    auto fn = [w, masks, disjoint](std::size_t i, const Event& h) -> Rational {
      if (disjoint && (h.mask() & masks[i])) return Rational(0);
      return w[i];
    };
    return at_path(path, [&] { return UncertaintyFamily::alpha(k, fn); });
  }
  if (kind == "explicit") {
    if (!d.contains("values")) fail(ErrorCode::kValidation, path, "missing \"values\"");
    const std::string vpath = path + ".values";
    std::map<std::uint64_t, RandomVariable> table;
    for (const auto& [key, row] : require_object(d["values"], vpath).items()) {
      const std::string rpath = vpath + "." + key;
      const Event h = at_path(rpath, [&] { return event_from_key(s.space, key); });
      std::vector<Rational> v(s.space->size());
      for (const auto& [label, x] : require_object(row, rpath).items()) {
        const std::size_t i = label_index(s.space, label, rpath);
        v[i] = read_rational(x, rpath + "." + label);
      }
      if (!table.emplace(h.mask(), RandomVariable(s.space, std::move(v))).second) {
        fail(ErrorCode::kValidation, rpath, "event " + h.str() + " listed twice");
      }
    }
    return at_path(path, [&] { return UncertaintyFamily::explicit_table(s.space, std::move(table)); });
  }
  fail(ErrorCode::kValidation, path + ".kind",
       "unknown family kind \"" + kind + "\"; expected partition, scaled, alpha or explicit");
}

template <typename T>
const T& lookup(const std::map<std::string, T>& m, const std::string& name, const char* what) {
  auto it = m.find(name);
  if (it == m.end()) throw Error(ErrorCode::kNotFound, std::string("unknown ") + what + " \"" + name + "\"");
  return it->second;
}

}  // namespace

Scenario Scenario::parse(std::string_view text) {
  const json doc = parse_document(text);
  require_object(doc, "document");
  static const std::set<std::string> kKnown = {"outcomes", "measures", "partitions", "events", "random_variables", "families"};
  for (const auto& [key, _] : doc.items()) {
    if (!kKnown.count(key)) fail(ErrorCode::kValidation, key, "unknown top-level key");
  }
  if (!doc.contains("outcomes")) fail(ErrorCode::kValidation, "outcomes", "missing");

  Scenario s;
  const auto labels = read_labels(doc["outcomes"], "outcomes");
  s.space = at_path("outcomes", [&] { return SampleSpace::make(labels); });
  auto section = [&](const char* key) -> const json& {
    static const json kEmpty = json::object();
    return doc.contains(key) ? require_object(doc[key], key) : kEmpty;
  };

  const json& parts = section("partitions");
  for (const auto& [name, v] : parts.items()) {
    const std::string path = "partitions." + name;
    if (name.size() > 6 && name.ends_with(".cover")) {
      const std::string base = name.substr(0, name.size() - 6);
      if (!v.is_boolean()) fail(ErrorCode::kValidation, path, "expected true or false");
      if (!parts.contains(base)) fail(ErrorCode::kValidation, path, "no partition named \"" + base + "\"");
      continue;
    }
    const std::string cover_key = name + ".cover";
    const bool cover = parts.contains(cover_key) && parts[cover_key].is_boolean() && parts[cover_key].get<bool>();
    std::vector<std::vector<std::string>> blocks;
    for (std::size_t i = 0; i < require_array(v, path).size(); ++i) {
      blocks.push_back(read_labels(v[i], path + "[" + std::to_string(i) + "]"));
    }
    s.partitions.emplace(name, at_path(path, [&] { return Partition::from_labels(s.space, blocks, cover); }));
  }

  for (const auto& [name, v] : section("measures").items()) {
    const std::string path = "measures." + name;
    std::vector<Rational> w(s.space->size());
    for (const auto& [label, x] : require_object(v, path).items()) {
      const std::size_t i = label_index(s.space, label, path);
      w[i] = read_rational(x, path + "." + label);
    }
    s.measures.emplace(name, at_path(path, [&] { return ProbMeasure::make(s.space, std::move(w)); }));
  }

  for (const auto& [name, v] : section("events").items()) {
    const std::string path = "events." + name;
    const auto ls = read_labels(v, path);
    s.events.emplace(name, at_path(path, [&] { return Event::of(s.space, ls); }));
  }

  for (const auto& [name, v] : section("random_variables").items()) {
    const std::string path = "random_variables." + name;
    std::vector<std::optional<Rational>> vals(s.space->size());
    for (const auto& [label, x] : require_object(v, path).items()) {
      const std::size_t i = label_index(s.space, label, path);
      vals[i] = read_rational(x, path + "." + label);
    }
    std::vector<Rational> out;
    for (std::size_t i = 0; i < vals.size(); ++i) {
      if (!vals[i]) fail(ErrorCode::kValidation, path, "no value for outcome \"" + s.space->label(i) + "\"");
      out.push_back(*vals[i]);
    }
    s.random_variables.emplace(name, RandomVariable(s.space, std::move(out)));
  }

  for (const auto& [name, v] : section("families").items()) {
    const std::string path = "families." + name;
    s.families.emplace(name, NamedFamily{build_family(s, v, path), v.dump()});
  }
  return s;
}

Scenario Scenario::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open scenario file \"" + path + "\"");
  std::stringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "cannot read scenario file \"" + path + "\"");
  return parse(buf.str());
}

std::string Scenario::render() const {
  json doc = json::object();
  doc["outcomes"] = space->labels();
  json parts = json::object();
  for (const auto& [name, z] : partitions) {
    json blocks = json::array();
    for (const auto& b : z.blocks()) blocks.push_back(b.labels());
    parts[name] = blocks;
    if (z.is_cover()) parts[name + ".cover"] = true;
  }
  doc["partitions"] = parts;
  json ms = json::object();
  for (const auto& [name, p] : measures) {
    json row = json::object();
    for (std::size_t i = 0; i < space->size(); ++i) row[space->label(i)] = p.weight(i).str();
    ms[name] = row;
  }
  doc["measures"] = ms;
  json es = json::object();
  for (const auto& [name, e] : events) es[name] = e.labels();
  doc["events"] = es;
  json rvs = json::object();
  for (const auto& [name, x] : random_variables) {
    json row = json::object();
    for (std::size_t i = 0; i < space->size(); ++i) row[space->label(i)] = x[i].str();
    rvs[name] = row;
  }
  doc["random_variables"] = rvs;
  json fs = json::object();
  for (const auto& [name, f] : families) fs[name] = json::parse(f.descriptor);
  doc["families"] = fs;
  return doc.dump(2) + "\n";
}

const Partition& Scenario::partition(const std::string& name) const { return lookup(partitions, name, "partition"); }
const ProbMeasure& Scenario::measure(const std::string& name) const { return lookup(measures, name, "measure"); }
const Event& Scenario::event(const std::string& name) const { return lookup(events, name, "event"); }
const RandomVariable& Scenario::random_variable(const std::string& name) const {
  return lookup(random_variables, name, "random variable");
}
const UncertaintyFamily& Scenario::family(const std::string& name) const {
  return lookup(families, name, "family").family;
}

bool operator==(const Scenario& a, const Scenario& b) {
  if (!same_space(a.space, b.space)) return false;
  if (a.partitions != b.partitions || a.measures != b.measures || a.events != b.events ||
      a.random_variables != b.random_variables || a.families.size() != b.families.size()) {
    return false;
  }
  for (auto ia = a.families.begin(), ib = b.families.begin(); ia != a.families.end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second.descriptor != ib->second.descriptor) return false;
  }
  return true;
}

}  // namespace iprob
