#include "racah/serialize.hpp"

#include <fstream>
#include <stdexcept>

namespace racah {

namespace {

Json matrix_to_json(const MatQ& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

MatQ matrix_from_json(const Json& j, Eigen::Index dim) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != dim)
    throw std::invalid_argument("RepFile: matrix row count mismatch");
  MatQ m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim)
      throw std::invalid_argument("RepFile: matrix column count mismatch");
    for (Eigen::Index k = 0; k < dim; ++k)
      m(i, k) = parse_rat(row[k].get<std::string>());
  }
  return m;
}

}  // namespace

RepFile to_repfile(const RacahRep& rep) {
  RepFile f;
  f.kind = "racah";
  f.dim = rep.dim;
  f.matrices = {{"A", rep.A}, {"B", rep.B}, {"C", rep.C}, {"D", rep.D}};
  f.meta = rep.meta;
  return f;
}

RepFile to_repfile(const DahaRep& rep) {
  RepFile f;
  f.kind = "daha";
  f.dim = rep.dim;
  f.matrices = {{"t0", rep.t0}, {"t1", rep.t1}, {"t2", rep.t2}, {"t3", rep.t3}};
  f.meta = rep.meta;
  return f;
}

namespace {

const MatQ& named(const RepFile& f, const char* name) {
  for (const auto& [n, m] : f.matrices)
    if (n == name) return m;
  throw std::invalid_argument(std::string("RepFile: missing matrix ") + name);
}

}  // namespace

RacahRep racah_from(const RepFile& f) {
  if (f.kind != "racah") throw std::invalid_argument("RepFile: kind is not racah");
  RacahRep rep;
  rep.dim = f.dim;
  rep.A = named(f, "A");
  rep.B = named(f, "B");
  rep.C = named(f, "C");
  rep.D = named(f, "D");
  rep.meta = f.meta;
  return rep;
}

DahaRep daha_from(const RepFile& f) {
  if (f.kind != "daha") throw std::invalid_argument("RepFile: kind is not daha");
  DahaRep rep;
  rep.dim = f.dim;
  rep.t0 = named(f, "t0");
  rep.t1 = named(f, "t1");
  rep.t2 = named(f, "t2");
  rep.t3 = named(f, "t3");
  rep.meta = f.meta;
  return rep;
}

Json spec_to_json(const ModuleSpec& spec) {
  Json j;
  j["family"] = family_name(spec.family);
  j["d"] = spec.d;
  j["a"] = to_string(spec.a);
  j["b"] = to_string(spec.b);
  j["c"] = to_string(spec.c);
  j["twist"] = Json::array({spec.twist.s1, spec.twist.s2});
  return j;
}

ModuleSpec spec_from_json(const Json& j) {
  std::string fam = j.at("family").get<std::string>();
  Family f;
  if (fam == "R")
    f = Family::R;
  else if (fam == "E")
    f = Family::E;
  else if (fam == "O")
    f = Family::O;
  else
    throw std::invalid_argument("ModuleSpec: unknown family " + fam);
  Twist tw;
  if (j.contains("twist")) {
    tw.s1 = j["twist"][0].get<int>();
    tw.s2 = j["twist"][1].get<int>();
    if ((tw.s1 != 1 && tw.s1 != -1) || (tw.s2 != 1 && tw.s2 != -1))
      throw std::invalid_argument("ModuleSpec: twist entries must be +-1");
  }
  return ModuleSpec(f, j.at("d").get<int>(), parse_rat(j.at("a").get<std::string>()),
                    parse_rat(j.at("b").get<std::string>()),
                    parse_rat(j.at("c").get<std::string>()), tw);
}

Json repfile_to_json(const RepFile& f) {
  Json j;
  j["kind"] = f.kind;
  j["dim"] = static_cast<long>(f.dim);
  j["convention"] = "column-action";
  Json mats;
  for (const auto& [name, m] : f.matrices) mats[name] = matrix_to_json(m);
  j["matrices"] = std::move(mats);
  if (f.meta) j["meta"] = spec_to_json(*f.meta);
  return j;
}

RepFile repfile_from_json(const Json& j) {
  RepFile f;
  f.kind = j.at("kind").get<std::string>();
  if (f.kind != "racah" && f.kind != "daha")
    throw std::invalid_argument("RepFile: kind must be racah or daha");
  long dim = j.at("dim").get<long>();
  if (dim <= 0) throw std::invalid_argument("RepFile: dim must be positive");
  f.dim = dim;
  if (j.at("convention").get<std::string>() != "column-action")
    throw std::invalid_argument("RepFile: unknown convention");
  const Json& mats = j.at("matrices");
  for (const auto& [name, arr] : mats.items())
    f.matrices.emplace_back(name, matrix_from_json(arr, f.dim));
  if (j.contains("meta")) f.meta = spec_from_json(j["meta"]);
  return f;
}

void write_repfile(const std::string& path, const RepFile& f) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  os << repfile_to_json(f).dump(2) << "\n";
  if (!os) throw std::runtime_error("write failed: " + path);
}

RepFile read_repfile(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open for reading: " + path);
  Json j = Json::parse(is, nullptr, true);
  return repfile_from_json(j);
}

}  // namespace racah
