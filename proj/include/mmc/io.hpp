// Copyright 2026 The Authors.
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

#ifndef MMC_IO_HPP_
#define MMC_IO_HPP_

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "mmc/errors.hpp"
#include "mmc/harness.hpp"
#include "mmc/market.hpp"
#include "mmc/matroid_impls.hpp"

// Instance files are JSON documents:
//
//   {
//     "doctors": ["d1", "d2"],
//     "hospitals": ["h1"],
//     "edges": [["d1", "h1"], ["d2", "h1"]],
//     "doctor_prefs": {"d1": [["h1"]], "d2": [["h1"]]},
//     "hospital_utils": {"h1": {"d1": 2, "d2": 1}},
//     "matroids": {"h1": {"type": "uniform", "capacity": 1}}
//   }
//
// Doctor tiers list hospitals, best tier first. Within a hospital's matroid
// descriptor an edge is named by its doctor. Matroid types are "uniform"
// ({"capacity": k}), "laminar" ({"sets": [{"doctors": [...], "cap": k}]})
// and "explicit" ({"independent": [[...], ...]}, every independent set).
//
// Matching files are a JSON array of [doctor, hospital] pairs.

namespace mmc::io {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

namespace detail {

inline Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError("byte " + std::to_string(e.byte), e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline const Json& field(const Json& obj, const char* key,
                         const std::string& where) {
  if (!obj.is_object()) throw ValidationError(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ValidationError(where.empty() ? key : where + "." + key,
                          "missing field");
  }
  return *it;
}

inline std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ValidationError(where, "expected a string");
  return j.get<std::string>();
}

inline std::int64_t as_positive(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) {
    throw ValidationError(where, "expected an integer");
  }
  const auto v = j.get<std::int64_t>();
  if (v <= 0) throw ValidationError(where, "expected a positive integer");
  return v;
}

inline const Json& as_array(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ValidationError(where, "expected an array");
  return j;
}

inline std::vector<std::string> names(const Json& j, const std::string& where) {
  std::vector<std::string> out;
  const Json& arr = as_array(j, where);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(as_string(arr[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

inline std::size_t index_of(const std::vector<std::string>& names,
                            const std::string& name, const std::string& where,
                            const char* kind) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  throw ValidationError(where, std::string("unknown ") + kind + " '" + name +
                                   "'");
}

/// Edge (d, h) for the doctor named in `j`, which must be adjacent to h.
inline EdgeId edge_by_doctor(const InstanceParts& p, std::size_t h,
                             const Json& j, const std::string& where) {
  const std::size_t d =
      index_of(p.doctors, as_string(j, where), where, "doctor");
  for (EdgeId e = 0; e < p.edges.size(); ++e) {
    if (p.edges[e] == Edge{d, h}) return e;
  }
  throw ValidationError(where, "no edge between " + p.doctors[d] + " and " +
                                   p.hospitals[h]);
}

inline EdgeSet edge_set_by_doctors(const InstanceParts& p, std::size_t h,
                                   const Json& j, const std::string& where) {
  EdgeSet out;
  const Json& arr = as_array(j, where);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    const EdgeId e = edge_by_doctor(p, h, arr[i], at);
    if (out.contains(e)) throw ValidationError(at, "listed twice");
    out.insert(e);
  }
  return out;
}

inline Matroid parse_matroid(const InstanceParts& p, std::size_t h,
                             EdgeSet ground, const Json& j,
                             const std::string& where) {
  const std::string type = as_string(field(j, "type", where), where + ".type");
  try {
    if (type == "uniform") {
      const auto cap = as_positive(field(j, "capacity", where),
                                   where + ".capacity");
      return make_uniform(ground, static_cast<std::size_t>(cap));
    }
    if (type == "laminar") {
      std::vector<CappedSet> sets;
      const std::string at = where + ".sets";
      const Json& arr = as_array(field(j, "sets", where), at);
      for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string item = at + "[" + std::to_string(i) + "]";
        const EdgeSet members =
            edge_set_by_doctors(p, h, field(arr[i], "doctors", item),
                                item + ".doctors");
        const Json& cap = field(arr[i], "cap", item);
        if (!cap.is_number_integer() || cap.get<std::int64_t>() < 0) {
          throw ValidationError(item + ".cap",
                                "expected a non-negative integer");
        }
        sets.push_back({members, cap.get<std::size_t>()});
      }
      return make_laminar(ground, std::move(sets));
    }
    if (type == "explicit") {
      std::vector<EdgeSet> family;
      const std::string at = where + ".independent";
      const Json& arr = as_array(field(j, "independent", where), at);
      for (std::size_t i = 0; i < arr.size(); ++i) {
        family.push_back(edge_set_by_doctors(
            p, h, arr[i], at + "[" + std::to_string(i) + "]"));
      }
      return make_explicit(ground, std::move(family));
    }
  } catch (const PreconditionError& e) {
    throw ValidationError(where, e.what());
  }
  throw ValidationError(where + ".type", "unknown matroid type '" + type + "'");
}

}  // namespace detail

/// Explicit matroid in an instance file that fails the axioms. Carries the
/// hospital so `axioms` can report the witness instead of a parse error.
class InstanceAxiomViolation : public ValidationError {
 public:
  InstanceAxiomViolation(std::string hospital, const AxiomViolation& cause)
      : ValidationError("matroids." + hospital, cause.what()),
        hospital_(std::move(hospital)),
        report_(cause.report()) {}

  const std::string& hospital() const { return hospital_; }
  const AxiomReport& report() const { return report_; }

 private:
  std::string hospital_;
  AxiomReport report_;
};

inline Instance instance_from_json(const Json& doc) {
  InstanceParts p;
  p.doctors = detail::names(detail::field(doc, "doctors", ""), "doctors");
  p.hospitals = detail::names(detail::field(doc, "hospitals", ""), "hospitals");

  const Json& edges = detail::as_array(detail::field(doc, "edges", ""), "edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (!edges[i].is_array() || edges[i].size() != 2) {
      throw ValidationError(where, "expected a [doctor, hospital] pair");
    }
    p.edges.push_back(
        {detail::index_of(p.doctors, detail::as_string(edges[i][0], where),
                          where, "doctor"),
         detail::index_of(p.hospitals, detail::as_string(edges[i][1], where),
                          where, "hospital")});
  }
  if (p.edges.size() > EdgeSet::kCapacity) {
    throw ValidationError("edges", "at most 64 edges are supported");
  }
  auto find_edge = [&](std::size_t d, std::size_t h,
                       const std::string& where) -> EdgeId {
    for (EdgeId e = 0; e < p.edges.size(); ++e) {
      if (p.edges[e] == Edge{d, h}) return e;
    }
    throw ValidationError(where, "no edge between " + p.doctors[d] + " and " +
                                     p.hospitals[h]);
  };

  const Json& prefs = detail::field(doc, "doctor_prefs", "");
  if (!prefs.is_object()) throw ValidationError("doctor_prefs", "expected an object");
  p.doctor_tiers.resize(p.doctors.size());
  for (const auto& [name, tiers] : prefs.items()) {
    const std::string where = "doctor_prefs." + name;
    const std::size_t d = detail::index_of(p.doctors, name, where, "doctor");
    const Json& arr = detail::as_array(tiers, where);
    for (std::size_t t = 0; t < arr.size(); ++t) {
      const std::string at = where + "[" + std::to_string(t) + "]";
      EdgeSet tier;
      for (const Json& hj : detail::as_array(arr[t], at)) {
        const std::size_t h = detail::index_of(
            p.hospitals, detail::as_string(hj, at), at, "hospital");
        tier.insert(find_edge(d, h, at));
      }
      p.doctor_tiers[d].push_back(tier);
    }
  }

  const Json& utils = detail::field(doc, "hospital_utils", "");
  if (!utils.is_object()) throw ValidationError("hospital_utils", "expected an object");
  p.utilities.assign(p.edges.size(), 0);
  for (const auto& [hname, row] : utils.items()) {
    const std::string where = "hospital_utils." + hname;
    const std::size_t h = detail::index_of(p.hospitals, hname, where, "hospital");
    if (!row.is_object()) throw ValidationError(where, "expected an object");
    for (const auto& [dname, value] : row.items()) {
      const std::string at = where + "." + dname;
      const std::size_t d = detail::index_of(p.doctors, dname, at, "doctor");
      p.utilities[find_edge(d, h, at)] = detail::as_positive(value, at);
    }
  }
  for (EdgeId e = 0; e < p.edges.size(); ++e) {
    if (p.utilities[e] == 0) {
      throw ValidationError("hospital_utils." + p.hospitals[p.edges[e].hospital] +
                                "." + p.doctors[p.edges[e].doctor],
                            "missing utility");
    }
  }

  const Json& matroids = detail::field(doc, "matroids", "");
  if (!matroids.is_object()) throw ValidationError("matroids", "expected an object");
  for (std::size_t h = 0; h < p.hospitals.size(); ++h) {
    const std::string where = "matroids." + p.hospitals[h];
    auto it = matroids.find(p.hospitals[h]);
    if (it == matroids.end()) throw ValidationError(where, "missing matroid");
    EdgeSet ground;
    for (EdgeId e = 0; e < p.edges.size(); ++e) {
      if (p.edges[e].hospital == h) ground.insert(e);
    }
    try {
      p.matroids.push_back(detail::parse_matroid(p, h, ground, *it, where));
    } catch (const AxiomViolation& e) {
      throw InstanceAxiomViolation(p.hospitals[h], e);
    } catch (const BoundExceeded& e) {
      throw ValidationError(where, e.what());
    }
  }
  for (const auto& [hname, _] : matroids.items()) {
    detail::index_of(p.hospitals, hname, "matroids." + hname, "hospital");
  }
  return Instance(std::move(p));
}

inline Instance parse_instance(const std::string& text) {
  return instance_from_json(detail::parse_text(text));
}

inline Instance load_instance(const std::string& path) {
  return parse_instance(detail::read_file(path));
}

namespace detail {

inline OrderedJson doctor_names(const Instance& inst, EdgeSet s) {
  OrderedJson out = OrderedJson::array();
  for (EdgeId e : s) out.push_back(inst.doctor_name(inst.edge(e).doctor));
  return out;
}

inline OrderedJson matroid_to_json(const Instance& inst, std::size_t h) {
  const Matroid& m = inst.matroid(h);
  OrderedJson j;
  if (const auto* u = m.target<UniformMatroid>()) {
    j["type"] = "uniform";
    j["capacity"] = u->capacity();
  } else if (const auto* f = m.target<FreeMatroid>()) {
    j["type"] = "uniform";
    j["capacity"] = std::max<std::size_t>(1, f->ground().size());
  } else if (const auto* l = m.target<LaminarMatroid>()) {
    j["type"] = "laminar";
    j["sets"] = OrderedJson::array();
    for (const CappedSet& p : l->sets()) {
      OrderedJson s;
      s["doctors"] = doctor_names(inst, p.members);
      s["cap"] = p.cap;
      j["sets"].push_back(std::move(s));
    }
  } else {
    j["type"] = "explicit";
    j["independent"] = OrderedJson::array();
    mmc::detail::require_bound(m.ground(), kDefaultExhaustiveBound,
                               "serializing matroid");
    for_each_subset(m.ground(), [&](EdgeSet s) {
      if (m.independent(s)) j["independent"].push_back(doctor_names(inst, s));
    });
  }
  return j;
}

}  // namespace detail

inline OrderedJson to_json(const Instance& inst) {
  OrderedJson doc;
  doc["doctors"] = inst.parts().doctors;
  doc["hospitals"] = inst.parts().hospitals;
  doc["edges"] = OrderedJson::array();
  for (const Edge& e : inst.edges()) {
    doc["edges"].push_back({inst.doctor_name(e.doctor), inst.hospital_name(e.hospital)});
  }
  doc["doctor_prefs"] = OrderedJson::object();
  for (std::size_t d = 0; d < inst.num_doctors(); ++d) {
    OrderedJson tiers = OrderedJson::array();
    for (EdgeSet tier : inst.tiers(d)) {
      OrderedJson names = OrderedJson::array();
      for (EdgeId e : tier) names.push_back(inst.hospital_name(inst.edge(e).hospital));
      tiers.push_back(std::move(names));
    }
    doc["doctor_prefs"][inst.doctor_name(d)] = std::move(tiers);
  }
  doc["hospital_utils"] = OrderedJson::object();
  for (std::size_t h = 0; h < inst.num_hospitals(); ++h) {
    OrderedJson row = OrderedJson::object();
    for (EdgeId e : inst.hospital_edges(h)) {
      row[inst.doctor_name(inst.edge(e).doctor)] = inst.utility(e);
    }
    doc["hospital_utils"][inst.hospital_name(h)] = std::move(row);
  }
  doc["matroids"] = OrderedJson::object();
  for (std::size_t h = 0; h < inst.num_hospitals(); ++h) {
    doc["matroids"][inst.hospital_name(h)] = detail::matroid_to_json(inst, h);
  }
  return doc;
}

inline std::string serialize_instance(const Instance& inst) {
  return to_json(inst).dump(2) + "\n";
}

/// Same names, edges, preferences, and equivalent matroids.
inline bool same_instance(const Instance& a, const Instance& b) {
  const InstanceParts& p = a.parts();
  const InstanceParts& q = b.parts();
  if (p.doctors != q.doctors || p.hospitals != q.hospitals ||
      p.edges != q.edges || p.doctor_tiers != q.doctor_tiers ||
      p.utilities != q.utilities) {
    return false;
  }
  for (std::size_t h = 0; h < a.num_hospitals(); ++h) {
    if (!equivalent(a.matroid(h), b.matroid(h), 20)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Matchings

inline EdgeSet matching_from_json(const Instance& inst, const Json& doc) {
  const Json& arr = detail::as_array(doc, "matching");
  EdgeSet mu;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "[" + std::to_string(i) + "]";
    if (!arr[i].is_array() || arr[i].size() != 2) {
      throw ValidationError(where, "expected a [doctor, hospital] pair");
    }
    const std::string dn = detail::as_string(arr[i][0], where);
    const std::string hn = detail::as_string(arr[i][1], where);
    const auto d = inst.find_doctor(dn);
    const auto h = inst.find_hospital(hn);
    if (!d) throw ValidationError(where, "unknown doctor '" + dn + "'");
    if (!h) throw ValidationError(where, "unknown hospital '" + hn + "'");
    const auto e = inst.find_edge(*d, *h);
    if (!e) throw ValidationError(where, "no edge between " + dn + " and " + hn);
    if (mu.contains(*e)) throw ValidationError(where, "edge listed twice");
    mu.insert(*e);
  }
  return mu;
}

inline EdgeSet parse_matching(const Instance& inst, const std::string& text) {
  return matching_from_json(inst, detail::parse_text(text));
}

inline EdgeSet load_matching(const Instance& inst, const std::string& path) {
  return parse_matching(inst, detail::read_file(path));
}

inline OrderedJson matching_to_json(const Instance& inst, EdgeSet mu) {
  OrderedJson out = OrderedJson::array();
  for (EdgeId e : mu) {
    out.push_back({inst.doctor_name(inst.edge(e).doctor),
                   inst.hospital_name(inst.edge(e).hospital)});
  }
  return out;
}

inline std::string serialize_matching(const Instance& inst, EdgeSet mu) {
  return matching_to_json(inst, mu).dump() + "\n";
}

// ---------------------------------------------------------------------------
// Verification records

inline OrderedJson to_json(const Instance& inst, const VerificationReport& r) {
  OrderedJson j;
  j["seed"] = r.seed;
  j["doctors"] = r.doctors;
  j["hospitals"] = r.hospitals;
  j["edges"] = r.edges;
  j["matchings"] = r.matchings;
  j["S"] = r.s;
  j["SS"] = r.ss;
  j["SSS"] = r.sss;
  j["C"] = r.c;
  j["C_S"] = r.c_s;
  j["C_SS"] = r.c_ss;
  j["C_minus_S"] = r.core_not_stable;
  j["s_subset_c"] = r.s_subset_c;
  j["ss_equals_cs"] = r.ss_equals_cs;
  j["sss_equals_css"] = r.sss_equals_css;
  j["stable_hierarchy"] = r.stable_hierarchy;
  j["core_hierarchy"] = r.core_hierarchy;
  j["prune_consistent"] = r.prune_consistent;
  j["violations"] = OrderedJson::array();
  for (const TheoremViolation& v : r.violations) {
    OrderedJson item;
    item["claim"] = v.claim;
    item["matching"] = matching_to_json(inst, v.matching);
    j["violations"].push_back(std::move(item));
  }
  return j;
}

}  // namespace mmc::io

#endif  // MMC_IO_HPP_
