#include "mfs/json_io.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "mfs/errors.hpp"

namespace mfs::io {

using nlohmann::json;

json weight_json(const RootDatum& d, const Weight& w) {
  json j;
  j["eps"] = json::array();
  for (const auto& c : w.eps) j["eps"].push_back(c.str());
  j["fw"] = d.fw_coords(w);
  return j;
}

Weight weight_from_json(const RootDatum& d, const json& j) {
  if (j.contains("fw")) {
    std::vector<long long> f = j["fw"].get<std::vector<long long>>();
    return d.weight_fw(f);
  }
  if (j.contains("eps")) {
    Weight w;
    for (const auto& c : j["eps"]) w.eps.push_back(Rat::parse(c.get<std::string>()));
    if (!d.in_weight_lattice(w)) throw LatticeMismatch("weight not in lattice");
    return w;
  }
  throw ParseError("weight JSON needs 'fw' or 'eps'");
}

json datum_json(const RootDatum& d) {
  json j;
  j["components"] = json::array();
  for (const auto& c : d.components())
    j["components"].push_back({std::string(1, static_cast<char>(c.family)), c.rank});
  j["torus"] = d.torus_rank();
  return j;
}

json branch_json(const RootDatum& source, const std::map<Weight, long long>& decomp) {
  json arr = json::array();
  for (const auto& [w, m] : decomp) {
    json item;
    item["weight"] = source.fw_coords(w);
    item["mult"] = m;
    arr.push_back(item);
  }
  return arr;
}

std::string branch_csv(const RootDatum& source, const std::map<Weight, long long>& decomp) {
  std::ostringstream os;
  os << "weight_fw,mult\n";
  for (const auto& [w, m] : decomp) {
    auto f = source.fw_coords(w);
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f[i];
    os << "," << m << "\n";
  }
  return os.str();
}

WellSlice build_slice(wells::MFPair& pair, const Weight& mu, const Rat& cutoff) {
  WellSlice s;
  s.pair = pair.name();
  s.mu = pair.mu_param(mu);
  s.cutoff = cutoff;
  s.elements = pair.enumerate_well(mu, cutoff);
  for (const auto& w : s.elements) {
    auto idx = pair.index_of(mu, w);
    s.degrees.push_back(idx.degree);
    s.tags.push_back(idx.tag);
  }
  return s;
}

json slice_json(const wells::MFPair& pair, const WellSlice& s) {
  json j;
  j["pair"] = s.pair;
  j["mu"] = s.mu;
  j["cutoff"] = s.cutoff.str();
  j["elements"] = json::array();
  for (std::size_t i = 0; i < s.elements.size(); ++i) {
    json item;
    item["lambda"] = pair.g().fw_coords(s.elements[i]);
    item["degree"] = s.degrees[i];
    item["tag"] = s.tags[i];
    j["elements"].push_back(item);
  }
  return j;
}

std::string slice_csv(const wells::MFPair& pair, const WellSlice& s) {
  std::ostringstream os;
  os << "lambda_fw,degree,tag\n";
  for (std::size_t i = 0; i < s.elements.size(); ++i) {
    auto f = pair.g().fw_coords(s.elements[i]);
    for (std::size_t k = 0; k < f.size(); ++k) os << (k ? " " : "") << f[k];
    os << "," << s.degrees[i] << "," << s.tags[i] << "\n";
  }
  return os.str();
}

json leading_json(const poly::LeadingReport& rep) {
  json j;
  j["d"] = rep.d;
  j["i"] = rep.i + 1;  // 1-based generator index in the external format
  j["blocks"] = json::array();
  for (const auto& b : rep.blocks) {
    json blk;
    blk["dprime"] = b.dprime;
    blk["pattern"] = b.pattern;
    blk["diagonal_full"] = b.diagonal_full;
    blk["diagonal_empty"] = b.diagonal_empty;
    blk["upper_triangular"] = b.upper_triangular;
    blk["strict_by_tag"] = b.strict_by_tag;
    j["blocks"].push_back(blk);
  }
  j["leading_diagonal_full"] = rep.leading_diagonal_full;
  j["leading_upper_triangular"] = rep.leading_upper_triangular;
  j["others_strict_by_tag"] = rep.others_strict_by_tag;
  return j;
}

json audit_json(const std::vector<gate::RowReport>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json j;
    j["table"] = r.table;
    j["row"] = r.row_id;
    j["dimG"] = r.dim_g;
    j["dimH"] = r.dim_h;
    j["dimHstar"] = r.dim_hstar;
    j["nposG"] = r.npos_g;
    j["c"] = r.c;
    j["r"] = r.r;
    j["ok"] = r.ok;
    j["note"] = r.note;
    j["jc"] = json::array();
    for (const auto& chk : r.jc_checks) {
      json c;
      c["jc"] = std::vector<int>(chk.jc.begin(), chk.jc.end());
      c["parabolic_dim"] = chk.pdim;
      c["pass"] = chk.pass;
      j["jc"].push_back(c);
    }
    json scan = json::array();
    for (const auto& chk : r.maximal_scan) {
      json c;
      c["dropped"] = *chk.jc.begin();
      c["parabolic_dim"] = chk.pdim;
      c["pass"] = chk.pass;
      scan.push_back(c);
    }
    j["maximal_scan"] = scan;
    arr.push_back(j);
  }
  return arr;
}

Weight parse_weight(const RootDatum& d, const std::string& text, bool eps) {
  std::vector<std::string> toks;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      toks.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  if (!cur.empty()) toks.push_back(cur);

  if (eps) {
    Weight w;
    for (const auto& t : toks) w.eps.push_back(Rat::parse(t));
    if (!d.in_weight_lattice(w))
      throw LatticeMismatch("epsilon coordinates are not a lattice weight");
    return w;
  }
  std::vector<long long> f;
  for (const auto& t : toks) {
    Rat r = Rat::parse(t);
    f.push_back(r.as_integer());
  }
  return d.weight_fw(f);
}

}  // namespace mfs::io
