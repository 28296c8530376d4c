#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include <json.hpp>

#include "numrad/cli.hpp"

namespace numrad::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

std::size_t positive(const json& doc, const char* key) {
  if (!doc.contains(key)) fail(std::string("missing \"") + key + "\"");
  const json& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() <= 0) {
    fail(std::string("\"") + key + "\" must be a positive integer");
  }
  return v.get<std::size_t>();
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) fail(where + " is not a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail(where + " is not finite");
  return d;
}

}  // namespace

MatrixDocument parseDocument(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("document must be a JSON object");

  const std::size_t rows = positive(doc, "rows");
  const std::size_t cols = positive(doc, "cols");
  Field field = Field::complex;
  if (doc.contains("field")) {
    const json& f = doc.at("field");
    if (f == "real") {
      field = Field::real;
    } else if (f != "complex") {
      fail("\"field\" must be \"real\" or \"complex\"");
    }
  }

  if (!doc.contains("entries") || !doc.at("entries").is_array()) fail("missing \"entries\" array");
  const json& entries = doc.at("entries");
  if (entries.size() != rows) fail(fmt::format("expected {} rows of entries, found {}", rows, entries.size()));

  MatrixDocument out;
  out.matrix = CMatrix(rows, cols, field);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = entries[i];
    if (!row.is_array() || row.size() != cols) fail(fmt::format("row {} must hold {} entries", i, cols));
    for (std::size_t j = 0; j < cols; ++j) {
      const json& e = row[j];
      const std::string where = fmt::format("entry ({}, {})", i, j);
      if (!e.is_array() || e.size() != 2) fail(where + " must be a [re, im] pair");
      const double re = number(e[0], where);
      const double im = number(e[1], where);
      if (field == Field::real && im != 0.0) fail(where + " has a nonzero imaginary part in a real document");
      out.matrix(i, j) = cplx(re, im);
    }
  }

  if (doc.contains("partition")) {
    const json& p = doc.at("partition");
    if (!p.is_array()) fail("\"partition\" must be an array");
    if (rows != cols) fail("a partition needs a square matrix");
    std::vector<std::size_t> sizes;
    for (const json& s : p) {
      if (!s.is_number_integer() || s.get<long long>() <= 0) fail("partition sizes must be positive integers");
      sizes.push_back(s.get<std::size_t>());
    }
    if (sizes.empty()) fail("partition is empty");
    BlockPartition part(sizes);
    if (part.dimension() != rows) fail(fmt::format("partition sums to {}, matrix has {} rows", part.dimension(), rows));
    out.partition = std::move(part);
  }
  return out;
}

MatrixDocument loadDocument(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseDocument(buf.str());
}

std::string writeDocument(const MatrixDocument& doc) {
  const CMatrix& m = doc.matrix;
  std::string s = fmt::format("{{\n  \"rows\": {},\n  \"cols\": {},\n  \"field\": \"{}\",\n", m.rows(), m.cols(),
                              m.isReal() ? "real" : "complex");
  if (doc.partition) s += fmt::format("  \"partition\": [{}],\n", fmt::join(doc.partition->sizes(), ", "));
  s += "  \"entries\": [\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += "    [";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      // {} is the shortest representation that reads back to the same double.
      s += fmt::format("{}[{}, {}]", j ? ", " : "", m(i, j).real(), m(i, j).imag());
    }
    s += i + 1 < m.rows() ? "],\n" : "]\n";
  }
  s += "  ]\n}\n";
  return s;
}

}  // namespace numrad::cli
