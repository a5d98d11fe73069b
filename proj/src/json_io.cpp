#include "newtoncycles/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "newtoncycles/errors.hpp"

namespace newtoncycles::json_io {

namespace {

Complex complex_from_json(const Json& item) {
  if (item.is_number()) return {item.get<double>(), 0.0};
  if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number()) {
    throw Error(ErrorKind::InvalidArgument, "expected [re, im] pair, got " + item.dump());
  }
  return {item[0].get<double>(), item[1].get<double>()};
}

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  if (x == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

bool is_flat(const Json& v) {
  if (!v.is_array()) return !v.is_object();
  for (const auto& item : v) {
    if (item.is_object()) return false;
    if (item.is_array()) {
      for (const auto& inner : item) {
        if (inner.is_structured()) return false;
      }
    }
  }
  return true;
}

void write(const Json& v, int indent, int level, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent * (level + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * level), ' ');
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + Json(it.key()).dump() + ": ";
        write(it.value(), indent, level + 1, out);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (is_flat(v)) {
        out += "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i > 0) out += ", ";
          write(v[i], indent, level + 1, out);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ",\n";
        out += pad;
        write(v[i], indent, level + 1, out);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_double(v.get<double>());
      return;
    default:
      out += v.dump();
      return;
  }
}

}  // namespace

std::vector<Complex> parse_complex_list(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_array()) {
    throw Error(ErrorKind::InvalidArgument, "expected a JSON array of [re, im] pairs");
  }
  std::vector<Complex> out;
  out.reserve(doc.size());
  for (const auto& item : doc) out.push_back(complex_from_json(item));
  return out;
}

Polynomial parse_polynomial(std::string_view text) {
  auto coeffs = parse_complex_list(text);
  if (coeffs.empty()) throw Error(ErrorKind::InvalidArgument, "polynomial needs at least one coefficient");
  return Polynomial(std::move(coeffs));
}

Complex parse_complex_pair(std::string_view text) {
  const std::string s(text);
  const auto comma = s.find(',');
  try {
    std::size_t used = 0;
    if (comma == std::string::npos) {
      const double re = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return {re, 0.0};
    }
    const std::string re_text = s.substr(0, comma);
    const std::string im_text = s.substr(comma + 1);
    const double re = std::stod(re_text, &used);
    if (used != re_text.size()) throw std::invalid_argument(s);
    const double im = std::stod(im_text, &used);
    if (used != im_text.size()) throw std::invalid_argument(s);
    return {re, im};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::InvalidArgument, "expected <re,im>, got '" + s + "'");
  }
}

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const std::vector<Complex>& zs) {
  Json arr = Json::array();
  for (const Complex& z : zs) arr.push_back(to_json(z));
  return arr;
}

Json to_json(const Polynomial& p) {
  return to_json(std::vector<Complex>(p.coeffs().begin(), p.coeffs().end()));
}

Json to_json(const CycleReport& report) {
  Json j;
  j["closure_errors"] = report.closure_errors;
  j["multiplier"] = to_json(report.multiplier);
  j["multiplier_abs"] = std::abs(report.multiplier);
  j["root_clearance"] = report.root_clearance;
  j["diameter"] = report.diameter;
  j["distinct"] = report.distinct;
  j["super_attracting"] = report.super_attracting;
  return j;
}

Json to_json(const BracketTable& table) {
  Json j;
  j["d"] = table.d;
  j["c"] = table.c;
  j["b"] = table.b;
  return j;
}

Json to_json(const SharpnessCertificate& cert) {
  Json j;
  j["n"] = cert.n;
  j["zeta"] = to_json(cert.zeta);
  j["rank_b"] = cert.rank_b;
  j["nullity"] = cert.nullity;
  j["det_bn"] = to_json(cert.det_bn);
  j["det_v"] = to_json(cert.det_v);
  j["det_d"] = to_json(cert.det_d);
  j["det_v_times_det_d"] = to_json(cert.det_v * cert.det_d);
  j["leading_ratio"] = cert.leading_ratio;
  j["polynomial"] = to_json(cert.monic_poly);
  j["cycle_verified"] = cert.cycle_verified;
  j["report"] = to_json(cert.report);
  Json sweep = Json::array();
  for (const auto& e : cert.sweep) {
    Json row;
    row["degree"] = e.degree;
    row["nullity"] = e.nullity;
    row["admits_polynomial"] = e.admits_polynomial;
    sweep.push_back(row);
  }
  j["degree_sweep"] = sweep;
  Json pivots = Json::array();
  for (double m : cert.pivot_magnitudes) pivots.push_back(m);
  j["pivot_magnitudes"] = pivots;
  return j;
}

std::string dump(const Json& value, int indent) {
  std::string out;
  write(value, indent, 0, out);
  return out;
}

}  // namespace newtoncycles::json_io
