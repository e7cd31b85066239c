#pragma once

// File formats: multivectors as JSON arrays of 8 numbers in blade order
// (1, e1, e2, e3, e12, e13, e23, e123), trajectories as CSV with header
// k,px,py,pz,success_prob or as a JSON array of records. Doubles are written
// in their shortest round-trip decimal form, so identical inputs produce
// byte-identical files and parsing restores values bit-exactly. Records
// without a polarization (statevector-only runs) leave px,py,pz empty in
// CSV and null in JSON.

#include <charconv>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "grover/cl3.hpp"
#include "grover/search.hpp"

namespace grover::io {

inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view text) {
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw std::invalid_argument("parse_double: bad number '" + std::string(text) + "'");
  }
  return v;
}

inline nlohmann::json multivector_to_json(const cl3::Multivector& m) {
  nlohmann::json arr = nlohmann::json::array();
  for (double v : m.c) arr.push_back(v);
  return arr;
}

inline cl3::Multivector multivector_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 8) {
    throw std::invalid_argument("multivector_from_json: expected an array of 8 numbers");
  }
  cl3::Multivector m;
  for (std::size_t i = 0; i < 8; ++i) m.c[i] = j[i].get<double>();
  return m;
}

struct Record {
  long k = 0;
  std::optional<cl3::Vector3> polarization;
  double success_prob = 0.0;
};

inline std::vector<Record> records_from(const Trajectory& t) {
  std::vector<Record> out;
  out.reserve(t.points.size());
  for (const TrajectoryPoint& p : t.points) {
    out.push_back({p.k, p.polarization, p.success_prob});
  }
  return out;
}

// Statevector runs carry success probabilities only.
inline std::vector<Record> records_from(const std::vector<double>& success_seq) {
  std::vector<Record> out;
  out.reserve(success_seq.size());
  for (std::size_t k = 0; k < success_seq.size(); ++k) {
    out.push_back({static_cast<long>(k), std::nullopt, success_seq[k]});
  }
  return out;
}

inline constexpr std::string_view kCsvHeader = "k,px,py,pz,success_prob";

inline void write_csv(std::ostream& os, const std::vector<Record>& records) {
  os << kCsvHeader << '\n';
  for (const Record& r : records) {
    os << r.k << ',';
    if (r.polarization) {
      os << format_double(r.polarization->x) << ',' << format_double(r.polarization->y) << ','
         << format_double(r.polarization->z) << ',';
    } else {
      os << ",,,";
    }
    os << format_double(r.success_prob) << '\n';
  }
}

inline std::vector<Record> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader) {
    throw std::invalid_argument("read_csv: missing header '" + std::string(kCsvHeader) + "'");
  }
  std::vector<Record> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (std::size_t pos = 0; pos <= line.size(); ++pos) {
      if (pos == line.size() || line[pos] == ',') {
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
      }
    }
    if (fields.size() != 5) {
      throw std::invalid_argument("read_csv: expected 5 fields, got line '" + line + "'");
    }
    Record r;
    r.k = static_cast<long>(parse_double(fields[0]));
    const bool has_p = !fields[1].empty() || !fields[2].empty() || !fields[3].empty();
    if (has_p) {
      r.polarization = cl3::Vector3{parse_double(fields[1]), parse_double(fields[2]),
                                    parse_double(fields[3])};
    }
    r.success_prob = parse_double(fields[4]);
    out.push_back(r);
  }
  return out;
}

inline nlohmann::json records_to_json(const std::vector<Record>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Record& r : records) {
    nlohmann::json j;
    j["k"] = r.k;
    if (r.polarization) {
      j["px"] = r.polarization->x;
      j["py"] = r.polarization->y;
      j["pz"] = r.polarization->z;
    } else {
      j["px"] = nullptr;
      j["py"] = nullptr;
      j["pz"] = nullptr;
    }
    j["success_prob"] = r.success_prob;
    arr.push_back(j);
  }
  return arr;
}

inline void write_json(std::ostream& os, const std::vector<Record>& records) {
  os << records_to_json(records).dump(2) << '\n';
}

inline std::vector<Record> read_json(std::istream& is) {
  const nlohmann::json arr = nlohmann::json::parse(is);
  if (!arr.is_array()) throw std::invalid_argument("read_json: expected an array of records");
  std::vector<Record> out;
  out.reserve(arr.size());
  for (const nlohmann::json& j : arr) {
    Record r;
    r.k = j.at("k").get<long>();
    if (!j.at("px").is_null()) {
      r.polarization = cl3::Vector3{j.at("px").get<double>(), j.at("py").get<double>(),
                                    j.at("pz").get<double>()};
    }
    r.success_prob = j.at("success_prob").get<double>();
    out.push_back(r);
  }
  return out;
}

}  // namespace grover::io
