// JSON serialization of the exchange types. Rationals travel as "p/q"
// strings; object keys keep insertion order so identical inputs always
// produce identical bytes.
#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "likit/embeddings.hpp"
#include "likit/trace_words.hpp"

namespace likit {

using Json = nlohmann::ordered_json;

inline Json to_json(const Vec& v) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i).get_str());
  return arr;
}

inline Vec vec_from_json(const Json& j) {
  Vec v(static_cast<Eigen::Index>(j.size()));
  Eigen::Index i = 0;
  for (const auto& c : j) v(i++) = parse_rat(c.get<std::string>());
  return v;
}

inline Json to_json(const Mat& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json to_json(const WeightMultiset& ws) {
  Json j;
  j["ambient_dim"] = ws.ambient_dim;
  Json weights = Json::array();
  for (const auto& [w, m] : ws.entries) {
    Json entry;
    entry["coords"] = to_json(w);
    entry["mult"] = m;
    weights.push_back(std::move(entry));
  }
  j["weights"] = std::move(weights);
  return j;
}

inline WeightMultiset weight_multiset_from_json(const Json& j) {
  WeightMultiset ws(j.at("ambient_dim").get<int>());
  for (const auto& entry : j.at("weights"))
    ws.add(vec_from_json(entry.at("coords")), entry.at("mult").get<long>());
  return ws;
}

inline Json to_json(const ToralEmbedding& e) {
  Json j;
  j["source"] = e.source_name();
  j["target"] = e.target.name();
  Json images = Json::array();
  for (const Vec& v : e.coroot_images) images.push_back(to_json(v));
  j["coroot_images"] = std::move(images);
  return j;
}

inline ToralEmbedding embedding_from_json(const Json& j) {
  std::string source = j.at("source").get<std::string>();
  RootSystem target = build_root_system(j.at("target").get<std::string>());
  std::vector<Vec> images;
  for (const auto& v : j.at("coroot_images")) images.push_back(vec_from_json(v));
  if (!source.empty() && source[0] == 'T') {
    int rank = std::stoi(source.substr(1));
    return make_torus_embedding(rank, std::move(target), std::move(images));
  }
  return make_embedding(build_root_system(source), std::move(target), std::move(images));
}

inline Json to_json(const TracePolynomial& p) {
  Json terms = Json::array();
  for (const auto& [prod, c] : p.terms) {
    Json term;
    term["coeff"] = c.get_str();
    Json words = Json::array();
    for (const TraceWord& w : prod) words.push_back(w.letters);
    term["words"] = std::move(words);
    terms.push_back(std::move(term));
  }
  return terms;
}

inline TracePolynomial trace_polynomial_from_json(const Json& j) {
  TracePolynomial p;
  for (const auto& term : j) {
    std::vector<TraceWord> words;
    for (const auto& w : term.at("words")) words.push_back(TraceWord(w.get<std::vector<int>>()));
    p.add_term(make_product(std::move(words)), parse_rat(term.at("coeff").get<std::string>()));
  }
  return p;
}

inline Json to_json(const StabilizerResult& res) {
  Json j;
  j["order"] = res.group.order.get_str();
  Json gens = Json::array();
  for (const OrthogonalMap& g : res.group.generators) gens.push_back(to_json(g.matrix()));
  j["generators"] = std::move(gens);
  j["restricted_to_span"] = res.restricted_to_span;
  j["ignored_zero_multiplicity"] = res.ignored_zero_multiplicity;
  j["search_stats"] = Json{{"nodes", res.stats.nodes}, {"prunes", res.stats.prunes}};
  return j;
}

inline Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open '" + path + "'");
  Json j;
  in >> j;
  return j;
}

}  // namespace likit
