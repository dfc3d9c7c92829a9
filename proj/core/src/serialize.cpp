#include "plwzw/serialize.hpp"

#include "plwzw/errors.hpp"

#include <fstream>
#include <sstream>

namespace plwzw {

json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw InvalidArgument("matrix JSON must be a nonempty array of rows");
  const auto rows = static_cast<int>(j.size());
  const auto cols = static_cast<int>(j.at(0).size());
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = j.at(static_cast<size_t>(i));
    if (!row.is_array() || static_cast<int>(row.size()) != cols) throw InvalidArgument("matrix JSON has ragged rows");
    for (int k = 0; k < cols; ++k) {
      const json& e = row.at(static_cast<size_t>(k));
      if (!e.is_array() || e.size() != 2) throw InvalidArgument("matrix entry must be a [re, im] pair");
      m(i, k) = cplx(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  return m;
}

json loop_to_json(const FourierLoop& f) {
  json c = json::array();
  for (const auto& m : f.coeffs()) c.push_back(matrix_to_json(m));
  return {{"n", f.n()}, {"m_min", f.m_min()}, {"m_max", f.m_max()}, {"coeff", std::move(c)}};
}

FourierLoop loop_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    const int lo = j.at("m_min").get<int>();
    const int hi = j.at("m_max").get<int>();
    const json& c = j.at("coeff");
    if (hi < lo || !c.is_array() || static_cast<int>(c.size()) != hi - lo + 1)
      throw InvalidArgument("loop JSON: coefficient count does not match the mode window");
    std::vector<Mat> coeff;
    for (const auto& m : c) coeff.push_back(matrix_from_json(m));
    return {n, lo, std::move(coeff)};
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("loop JSON: ") + e.what());
  }
}

namespace {

json reals(const RVec& v) {
  json a = json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

RVec reals_from(const json& j) {
  if (!j.is_array()) throw InvalidArgument("expected an array of reals");
  RVec v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  return v;
}

} // namespace

json phase_point_to_json(const PhasePointKA& p) { return {{"k", loop_to_json(p.k)}, {"a", reals(p.a.coords)}}; }

PhasePointKA phase_point_from_json(const json& j) {
  try {
    return {loop_from_json(j.at("k")), CartanElement(reals_from(j.at("a")))};
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("phase point JSON: ") + e.what());
  }
}

json dual_point_to_json(const PhasePointDual& q) {
  return {{"ktilde", loop_to_json(q.ktilde)}, {"atilde", reals(q.atilde.coords)}};
}

PhasePointDual dual_point_from_json(const json& j) {
  try {
    return {loop_from_json(j.at("ktilde")), CartanElement(reals_from(j.at("atilde")))};
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("dual phase point JSON: ") + e.what());
  }
}

json rep_to_json(const AlgebraRep& rep) {
  json cartan = json::array();
  for (const auto& h : rep.cartan()) cartan.push_back(matrix_to_json(h));
  json steps = json::array();
  for (const auto& r : rep.root_system().positive_roots())
    steps.push_back({{"root", {r.i, r.j}}, {"E", matrix_to_json(rep.step(r))}});
  return {{"n", rep.n()}, {"cartan", std::move(cartan)}, {"positive_steps", std::move(steps)}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw IoError("cannot parse " + path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed for " + path);
}

} // namespace plwzw
