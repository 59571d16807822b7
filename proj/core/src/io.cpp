#include "banachlab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "banachlab/errors.hpp"

namespace banachlab {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw IoError(path + ": " + e.what());
  }
  return j;
}

cmat parse_matrix(const json& rows, int d) {
  if (static_cast<int>(rows.size()) != d)
    throw IoError("rep matrix has wrong row count");
  cmat m(d, d);
  for (int r = 0; r < d; ++r) {
    const auto& row = rows.at(r);
    if (static_cast<int>(row.size()) != d)
      throw IoError("rep matrix has wrong column count");
    for (int c = 0; c < d; ++c) {
      const auto& cell = row.at(c);
      if (cell.is_array())
        m(r, c) = cplx(cell.at(0).get<double>(), cell.at(1).get<double>());
      else
        m(r, c) = cplx(cell.get<double>(), 0.0);
    }
  }
  return m;
}

}  // namespace

AlgebraPtr load_algebra(const std::string& path) {
  json j = read_json_file(path);
  if (!j.contains("dim") || !j.contains("mult"))
    throw IoError(path + ": missing dim/mult");
  const int d = j["dim"].get<int>();
  if (d <= 0 || d > 64) throw IoError("dim out of range");
  std::vector<cmat> mult(d, cmat::Zero(d, d));
  for (const auto& e : j["mult"]) {
    if (e.size() != 5) throw IoError("mult entry must be [i,j,k,re,im]");
    int i = e.at(0).get<int>(), jj = e.at(1).get<int>(), k = e.at(2).get<int>();
    if (i < 0 || i >= d || jj < 0 || jj >= d || k < 0 || k >= d)
      throw IoError("mult index out of range");
    mult[i](jj, k) += cplx(e.at(3).get<double>(), e.at(4).get<double>());
  }

  NormKind norm = NormKind::l1();
  if (j.contains("norm")) {
    const auto& n = j["norm"];
    const std::string type = n.value("type", "l1");
    rvec w;
    if (n.contains("weights")) {
      const auto& jw = n["weights"];
      w.resize(static_cast<int>(jw.size()));
      for (int i = 0; i < w.size(); ++i) w[i] = jw.at(i).get<double>();
    }
    if (type == "l1") {
      norm = w.size() ? NormKind::l1_weighted(w) : NormKind::l1();
    } else if (type == "opnorm") {
      const std::string dom = n.value("domain", "l1");
      OpDomain od = dom == "linf"  ? OpDomain::Linf
                    : dom == "l2" ? OpDomain::L2
                                   : OpDomain::L1;
      if (!n.contains("rep")) throw IoError("opnorm needs rep matrices");
      const auto& reps = n["rep"];
      if (static_cast<int>(reps.size()) != d)
        throw IoError("opnorm needs one rep matrix per basis vector");
      int rd = static_cast<int>(reps.at(0).size());
      std::vector<cmat> rep(d);
      for (int i = 0; i < d; ++i) rep[i] = parse_matrix(reps.at(i), rd);
      norm = NormKind::opnorm(od, rep, w);
    } else {
      throw IoError("unknown norm type: " + type);
    }
  }

  std::optional<cvec> identity;
  if (j.contains("identity")) {
    cvec u(d);
    const auto& ji = j["identity"];
    if (static_cast<int>(ji.size()) != d)
      throw IoError("identity hint has wrong length");
    for (int i = 0; i < d; ++i) {
      const auto& cell = ji.at(i);
      if (cell.is_array())
        u[i] = cplx(cell.at(0).get<double>(), cell.at(1).get<double>());
      else
        u[i] = cplx(cell.get<double>(), 0.0);
    }
    identity = u;
  }

  return build_algebra(d, mult, norm, identity, j.value("label", path));
}

void save_algebra(const AlgebraPtr& alg, const std::string& path) {
  json j;
  const int d = alg->dim();
  j["dim"] = d;
  j["label"] = alg->label();
  json entries = json::array();
  for (int i = 0; i < d; ++i) {
    const cmat& m = alg->mult(i);
    for (int jj = 0; jj < d; ++jj)
      for (int k = 0; k < d; ++k)
        if (m(jj, k) != cplx(0.0, 0.0))
          entries.push_back({i, jj, k, m(jj, k).real(), m(jj, k).imag()});
  }
  j["mult"] = entries;
  const NormKind& nk = alg->norm_kind();
  json n;
  switch (nk.family) {
    case NormFamily::L1:
      n["type"] = "l1";
      if (nk.weights.size()) {
        json w = json::array();
        for (int i = 0; i < nk.weights.size(); ++i) w.push_back(nk.weights[i]);
        n["weights"] = w;
      }
      break;
    case NormFamily::OpNorm: {
      n["type"] = "opnorm";
      n["domain"] = nk.domain == OpDomain::Linf  ? "linf"
                    : nk.domain == OpDomain::L2 ? "l2"
                                                 : "l1";
      json reps = json::array();
      for (const cmat& m : nk.rep) {
        json rows = json::array();
        for (int r = 0; r < m.rows(); ++r) {
          json row = json::array();
          for (int c = 0; c < m.cols(); ++c)
            row.push_back({m(r, c).real(), m(r, c).imag()});
          rows.push_back(row);
        }
        reps.push_back(rows);
      }
      n["rep"] = reps;
      if (nk.weights.size()) {
        json w = json::array();
        for (int i = 0; i < nk.weights.size(); ++i) w.push_back(nk.weights[i]);
        n["weights"] = w;
      }
      break;
    }
    default:
      throw IoError("save_algebra: composite norms are not serializable");
  }
  j["norm"] = n;
  if (alg->is_unital()) {
    json u = json::array();
    cvec one = alg->identity_coeffs();
    for (int i = 0; i < d; ++i) u.push_back({one[i].real(), one[i].imag()});
    j["identity"] = u;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << j.dump(2) << "\n";
}

cvec parse_coeffs(const std::string& text, int dim) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw IoError(std::string("coefficients: ") + e.what());
  }
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw IoError("coefficients must be an array of length " +
                  std::to_string(dim));
  cvec v(dim);
  for (int i = 0; i < dim; ++i) {
    const auto& cell = j.at(i);
    if (cell.is_array())
      v[i] = cplx(cell.at(0).get<double>(), cell.at(1).get<double>());
    else
      v[i] = cplx(cell.get<double>(), 0.0);
  }
  return v;
}

void write_outer_csv(const OuterBody& body, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << "theta,support\n";
  for (int k = 0; k < static_cast<int>(body.h.size()); ++k)
    out << format_double(body.theta(k)) << "," << format_double(body.h[k])
        << "\n";
}

void write_inner_csv(const std::vector<cplx>& pts, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << "re,im\n";
  for (const cplx& p : pts)
    out << format_double(p.real()) << "," << format_double(p.imag()) << "\n";
}

}  // namespace banachlab
