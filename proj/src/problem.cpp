#include "csgamma/problem.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace csgamma {

namespace {

using nlohmann::json;

double finite_number(const json& j, const std::string& where) {
  if (!j.is_number())
    throw ParseError(where + ": expected a number");
  double x = j.get<double>();
  if (!std::isfinite(x)) throw ParseError(where + ": non-finite number");
  return x;
}

// Scalar entry: a plain number, or [re, im] for complex values.
Complex entry(const json& j, Field field, const std::string& where) {
  if (j.is_number()) return Complex(finite_number(j, where), 0.0);
  if (j.is_array() && j.size() == 2) {
    double re = finite_number(j[0], where);
    double im = finite_number(j[1], where);
    if (field == Field::real && im != 0.0)
      throw ParseError(where + ": complex entry in a real space");
    return Complex(re, im);
  }
  throw ParseError(where + ": expected a number or an [re, im] pair");
}

std::vector<Complex> coord_array(const json& j, int dim, Field field,
                                 const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  if (static_cast<int>(j.size()) != dim)
    throw ParseError(where + ": expected " + std::to_string(dim) + " entries");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i)
    out.push_back(entry(j[i], field, where + "[" + std::to_string(i) + "]"));
  return out;
}

// Generator matrix written as an array of rows, one generator per row;
// stored with generators as columns.
Mat generator_matrix(const json& j, int dim, Field field, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of generators");
  Mat m(dim, static_cast<int>(j.size()));
  for (size_t g = 0; g < j.size(); ++g) {
    auto row = coord_array(j[g], dim, field, where + "[" + std::to_string(g) + "]");
    for (int i = 0; i < dim; ++i) m(i, static_cast<int>(g)) = row[static_cast<size_t>(i)];
  }
  return m;
}

Mat square_matrix(const json& j, int dim, Field field, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw ParseError(where + ": expected " + std::to_string(dim) + " rows");
  Mat m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    auto row = coord_array(j[static_cast<size_t>(r)], dim, field,
                           where + "[" + std::to_string(r) + "]");
    for (int c = 0; c < dim; ++c) m(r, c) = row[static_cast<size_t>(c)];
  }
  return m;
}

// Real 2n space carrying Re(x, y) of a complex n-dim space:
// gram' = [[Re G, -Im G], [Im G, Re G]].
Space embed_space(const Space& s) {
  const int n = s.dim();
  if (s.identity_gram()) return Space(2 * n, Field::real);
  Mat g(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double re = s.gram()(i, j).real(), im = s.gram()(i, j).imag();
      g(i, j) = re;
      g(i, n + j) = -im;
      g(n + i, j) = im;
      g(n + i, n + j) = re;
    }
  return Space(2 * n, Field::real, g);
}

Mat embed_generators(const Mat& gen) {
  Mat out(2 * gen.rows(), gen.cols());
  for (int j = 0; j < gen.cols(); ++j)
    for (int i = 0; i < gen.rows(); ++i) {
      out(i, j) = gen(i, j).real();
      out(gen.rows() + i, j) = gen(i, j).imag();
    }
  return out;
}

}  // namespace

ProblemFile ProblemFile::parse_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("problem file: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("problem file: top level must be an object");

  ProblemFile pf;
  try {
    if (!root.contains("space") || !root["space"].is_object())
      throw ParseError("problem file: missing space object");
    const json& js = root["space"];
    if (!js.contains("dim") || !js["dim"].is_number_integer())
      throw ParseError("space: missing integer dim");
    int dim = js["dim"].get<int>();
    if (dim <= 0) throw ParseError("space: dim must be positive");
    std::string field_name = js.value("field", std::string("real"));
    Field field;
    if (field_name == "real")
      field = Field::real;
    else if (field_name == "complex")
      field = Field::complex;
    else
      throw ParseError("space: field must be \"real\" or \"complex\"");
    if (js.contains("gram"))
      pf.space_.emplace(dim, field, square_matrix(js["gram"], dim, field, "space.gram"));
    else
      pf.space_.emplace(dim, field);

    if (root.contains("measure")) {
      const json& jm = root["measure"];
      if (!jm.is_object() || !jm.contains("weights") || !jm["weights"].is_array())
        throw ParseError("measure: expected an object with a weights array");
      if (static_cast<int>(jm["weights"].size()) != dim)
        throw ParseError("measure: weights length must equal space dim");
      std::vector<double> w;
      for (size_t i = 0; i < jm["weights"].size(); ++i)
        w.push_back(finite_number(jm["weights"][i], "measure.weights"));
      pf.measure_.emplace(std::move(w));
    }

    if (root.contains("vectors")) {
      if (!root["vectors"].is_object()) throw ParseError("vectors: expected an object");
      for (const auto& [name, jv] : root["vectors"].items())
        pf.vectors_.emplace(name,
                            Vector(*pf.space_, coord_array(jv, dim, field, "vector " + name)));
    }
    if (root.contains("subspaces")) {
      if (!root["subspaces"].is_object()) throw ParseError("subspaces: expected an object");
      for (const auto& [name, jv] : root["subspaces"].items())
        pf.subspaces_.emplace(name, generator_matrix(jv, dim, field, "subspace " + name));
    }
    if (root.contains("cones")) {
      if (!root["cones"].is_object()) throw ParseError("cones: expected an object");
      for (const auto& [name, jc] : root["cones"].items()) {
        if (!jc.is_object() || !jc.contains("parts") || !jc["parts"].is_array() ||
            jc["parts"].empty())
          throw ParseError("cone " + name + ": expected an object with a nonempty parts array");
        std::vector<Mat> parts;
        for (size_t pi = 0; pi < jc["parts"].size(); ++pi)
          parts.push_back(generator_matrix(jc["parts"][pi], dim, field,
                                           "cone " + name + " part " + std::to_string(pi)));
        pf.cones_.emplace(name, std::move(parts));
      }
    }

    if (field == Field::complex && !pf.cones_.empty()) {
      pf.cone_space_.emplace(embed_space(*pf.space_));
      pf.cones_embedded_ = true;
    } else {
      pf.cone_space_ = pf.space_;
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("problem file: ") + e.what());
  }
  return pf;
}

ProblemFile ProblemFile::parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

const Vector& ProblemFile::vector(const std::string& name) const {
  auto it = vectors_.find(name);
  if (it == vectors_.end())
    throw std::invalid_argument("no vector named \"" + name + "\" in the problem file");
  return it->second;
}

Subspace ProblemFile::subspace(const std::string& name) const {
  auto it = subspaces_.find(name);
  if (it == subspaces_.end())
    throw std::invalid_argument("no subspace named \"" + name + "\" in the problem file");
  return orthonormalize(*space_, it->second);
}

UnionCone ProblemFile::cone(const std::string& name) const {
  auto it = cones_.find(name);
  if (it == cones_.end())
    throw std::invalid_argument("no cone named \"" + name + "\" in the problem file");
  std::vector<ConvexCone> parts;
  for (const Mat& gen : it->second)
    parts.emplace_back(*cone_space_, cones_embedded_ ? embed_generators(gen) : gen);
  return UnionCone(std::move(parts));
}

}  // namespace csgamma
