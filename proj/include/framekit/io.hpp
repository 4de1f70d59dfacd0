#ifndef FRAMEKIT_IO_HPP_
#define FRAMEKIT_IO_HPP_

// JSON documents for frame pairs, OVF pairs, p-frame pairs and group tables,
// plus the value formatting used by reports. Scalars are plain numbers or
// [re, im] pairs; vector families are arrays of columns.

#include "framekit/constructors.hpp"
#include "framekit/ovf.hpp"
#include "framekit/pframes.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace framekit::io {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace detail {

[[noreturn]] inline void fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

inline const json& member(const json& doc, const char* key) {
  if (!doc.is_object()) fail("document is not an object");
  auto it = doc.find(key);
  if (it == doc.end()) fail(std::string("missing key '") + key + "'");
  return *it;
}

inline double number(const json& v, const char* what) {
  if (!v.is_number()) fail(std::string(what) + ": expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail(std::string(what) + ": non-finite number");
  return d;
}

inline long integer(const json& v, const char* what) {
  if (!v.is_number_integer()) fail(std::string(what) + ": expected an integer");
  return v.get<long>();
}

inline cplx scalar(const json& v, Field f, const char* what) {
  if (v.is_number()) return {number(v, what), 0.0};
  if (v.is_array() && v.size() == 2) {
    const cplx z(number(v[0], what), number(v[1], what));
    if (f == Field::Real && z.imag() != 0.0) fail(std::string(what) + ": complex entry in a real document");
    return z;
  }
  fail(std::string(what) + ": expected a number or [re, im]");
}

inline Field field(const json& doc, Field fallback) {
  if (!doc.is_object() || !doc.contains("field")) return fallback;
  const json& v = doc["field"];
  if (v == "real") return Field::Real;
  if (v == "complex") return Field::Complex;
  fail("field must be \"real\" or \"complex\"");
}

// rows x cols matrix from an array of `outer` arrays of `inner` scalars;
// by_column places the inner arrays as columns.
inline Mat nested(const json& v, Eigen::Index outer, Eigen::Index inner, bool by_column, Field f, const char* what) {
  if (!v.is_array() || static_cast<Eigen::Index>(v.size()) != outer)
    fail(std::string(what) + ": expected " + std::to_string(outer) + " arrays");
  Mat out = by_column ? Mat(inner, outer) : Mat(outer, inner);
  for (Eigen::Index o = 0; o < outer; ++o) {
    const json& row = v[static_cast<std::size_t>(o)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != inner)
      fail(std::string(what) + ": expected arrays of " + std::to_string(inner) + " scalars");
    for (Eigen::Index i = 0; i < inner; ++i) {
      const cplx z = scalar(row[static_cast<std::size_t>(i)], f, what);
      (by_column ? out(i, o) : out(o, i)) = z;
    }
  }
  return out;
}

inline Eigen::Index positive(const json& doc, const char* key) {
  const long v = integer(member(doc, key), key);
  if (v < 1) fail(std::string(key) + " must be positive");
  return static_cast<Eigen::Index>(v);
}

// Lossless form for files: doubles go through the shortest round-trip repr.
inline json exact_scalar(cplx z, Field f) {
  if (f == Field::Real) return z.real();
  return json::array({z.real(), z.imag()});
}

inline json exact_nested(const Mat& m, bool by_column, Field f) {
  json out = json::array();
  const Eigen::Index outer = by_column ? m.cols() : m.rows();
  const Eigen::Index inner = by_column ? m.rows() : m.cols();
  for (Eigen::Index o = 0; o < outer; ++o) {
    json row = json::array();
    for (Eigen::Index i = 0; i < inner; ++i) row.push_back(exact_scalar(by_column ? m(i, o) : m(o, i), f));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace detail

inline json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorKind::IoError, "write failed for " + path);
}

inline FramePair frame_from_json(const json& doc, Tolerance tol = {}) {
  const Field f = detail::field(doc, Field::Real);
  const Eigen::Index m = detail::positive(doc, "dim"), n = detail::positive(doc, "count");
  Mat x = detail::nested(detail::member(doc, "x"), n, m, true, f, "x");
  Mat t = detail::nested(detail::member(doc, "tau"), n, m, true, f, "tau");
  return FramePair(f, std::move(x), std::move(t), tol);
}

inline json frame_to_json(const FramePair& fp) {
  json doc;
  doc["field"] = std::string(field_name(fp.field));
  doc["dim"] = fp.dim();
  doc["count"] = fp.count();
  doc["x"] = detail::exact_nested(fp.x, true, fp.field);
  doc["tau"] = detail::exact_nested(fp.tau, true, fp.field);
  return doc;
}

// d is an integer when members share a codomain, else one entry per member.
inline OvfPair ovf_from_json(const json& doc, Tolerance tol = {}) {
  const Field f = detail::field(doc, Field::Real);
  const Eigen::Index m = detail::positive(doc, "m"), n = detail::positive(doc, "n");
  const json& dj = detail::member(doc, "d");
  std::vector<Eigen::Index> d(static_cast<std::size_t>(n));
  if (dj.is_array()) {
    if (static_cast<Eigen::Index>(dj.size()) != n) detail::fail("d: expected one codomain per member");
    for (Eigen::Index j = 0; j < n; ++j) d[static_cast<std::size_t>(j)] = detail::integer(dj[static_cast<std::size_t>(j)], "d");
  } else {
    std::fill(d.begin(), d.end(), detail::positive(doc, "d"));
  }
  for (auto v : d)
    if (v < 1) detail::fail("d must be positive");
  auto family = [&](const char* key) {
    const json& arr = detail::member(doc, key);
    if (!arr.is_array() || static_cast<Eigen::Index>(arr.size()) != n) detail::fail(std::string(key) + ": expected n members");
    std::vector<Mat> out;
    for (Eigen::Index j = 0; j < n; ++j)
      out.push_back(detail::nested(arr[static_cast<std::size_t>(j)], d[static_cast<std::size_t>(j)], m, false, f, key));
    return out;
  };
  auto a = family("A");
  auto psi = family("psi");
  return OvfPair(f, m, std::move(a), std::move(psi), tol);
}

inline json ovf_to_json(const OvfPair& op) {
  json doc;
  doc["field"] = std::string(field_name(op.field));
  doc["m"] = op.m;
  if (const Eigen::Index d = op.uniform_codomain(); d > 0) {
    doc["d"] = d;
  } else {
    json ds = json::array();
    for (Eigen::Index j = 0; j < op.count(); ++j) ds.push_back(op.codomain(j));
    doc["d"] = ds;
  }
  doc["n"] = op.count();
  json a = json::array(), psi = json::array();
  for (Eigen::Index j = 0; j < op.count(); ++j) {
    a.push_back(detail::exact_nested(op.a[static_cast<std::size_t>(j)], false, op.field));
    psi.push_back(detail::exact_nested(op.psi[static_cast<std::size_t>(j)], false, op.field));
  }
  doc["A"] = a;
  doc["psi"] = psi;
  return doc;
}

inline PFramePair pframe_from_json(const json& doc, Tolerance tol = {}) {
  const Field f = detail::field(doc, Field::Real);
  const double p = detail::number(detail::member(doc, "p"), "p");
  const Eigen::Index m = detail::positive(doc, "dim"), n = detail::positive(doc, "count");
  Mat fm = detail::nested(detail::member(doc, "f"), n, m, false, f, "f");
  Mat t = detail::nested(detail::member(doc, "tau"), n, m, true, f, "tau");
  return PFramePair(p, f, std::move(fm), std::move(t), tol);
}

inline json pframe_to_json(const PFramePair& pf) {
  json doc;
  doc["field"] = std::string(field_name(pf.field));
  doc["p"] = pf.p;
  doc["dim"] = pf.dim();
  doc["count"] = pf.count();
  doc["f"] = detail::exact_nested(pf.f, false, pf.field);
  doc["tau"] = detail::exact_nested(pf.tau, true, pf.field);
  return doc;
}

inline GroupTable group_from_json(const json& doc) {
  const Eigen::Index order = detail::positive(doc, "order");
  const long e = detail::integer(detail::member(doc, "identity"), "identity");
  const json& mj = detail::member(doc, "mul");
  if (!mj.is_array() || static_cast<Eigen::Index>(mj.size()) != order) detail::fail("mul: expected order rows");
  std::vector<std::vector<int>> mul;
  for (const auto& row : mj) {
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != order) detail::fail("mul: expected order columns");
    std::vector<int> r;
    for (const auto& v : row) r.push_back(static_cast<int>(detail::integer(v, "mul")));
    mul.push_back(std::move(r));
  }
  return GroupTable(std::move(mul), static_cast<int>(e));
}

inline json group_to_json(const GroupTable& g) {
  json doc;
  doc["order"] = g.order();
  doc["identity"] = g.identity();
  doc["mul"] = g.table();
  return doc;
}

// A vector given inline as JSON ("[1, 0]" or "[[1, 0], [0, 1]]") or as a path
// to a file holding such an array.
inline Vec vector_from_text(const std::string& text, Field f) {
  const std::string src = !text.empty() && (text.front() == '[' || text.front() == '{') ? text : read_file(text);
  const json v = parse_text(src);
  if (!v.is_array() || v.empty()) detail::fail("vector: expected a non-empty array");
  Vec out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = detail::scalar(v[i], f, "vector");
  return out;
}

// Columns given as an array of equal-length arrays, inline or from a file.
// by_column = false reads the inner arrays as rows instead.
inline Mat matrix_from_text(const std::string& text, Field f, bool by_column = true) {
  const std::string src = !text.empty() && (text.front() == '[' || text.front() == '{') ? text : read_file(text);
  const json v = parse_text(src);
  if (!v.is_array() || v.empty() || !v[0].is_array() || v[0].empty())
    detail::fail("matrix: expected a non-empty array of arrays");
  return detail::nested(v, static_cast<Eigen::Index>(v.size()), static_cast<Eigen::Index>(v[0].size()), by_column, f,
                        "matrix");
}

// ---- report values -------------------------------------------------------

inline double round12(double v) {
  if (!std::isfinite(v) || v == 0.0) return v == 0.0 ? 0.0 : v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::stod(buf);
}

inline ordered_json num(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  return round12(v);
}

inline ordered_json num(cplx z) { return ordered_json::array({num(z.real()), num(z.imag())}); }

inline ordered_json num(const Vec& v, Field f) {
  ordered_json out = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(f == Field::Real ? num(v[i].real()) : num(v[i]));
  return out;
}

inline ordered_json num(const Mat& m, Field f) {
  ordered_json out = ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(num(Vec(m.row(i).transpose()), f));
  return out;
}

inline ordered_json num(const NormInterval& iv) { return ordered_json{{"lower", num(iv.lower)}, {"upper", num(iv.upper)}}; }

template <typename T>
ordered_json opt(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_same_v<T, bool>) return *v;
  else return num(*v);
}

}  // namespace framekit::io

#endif  // FRAMEKIT_IO_HPP_
