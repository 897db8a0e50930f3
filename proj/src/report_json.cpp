#include "grsc/report_json.hpp"

#include <chrono>
#include <ctime>

namespace grsc {

namespace {

std::string utc_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

Json report_envelope(const std::string& subcommand, Json config, Json report) {
  Json j;
  j["schema_version"] = 1;
  j["tool"] = "grsc";
  j["version"] = "0.1.0";
  j["timestamp"] = utc_timestamp();
  j["subcommand"] = subcommand;
  j["config"] = std::move(config);
  j["report"] = std::move(report);
  return j;
}

Json json_of(const Rational& r) { return r.str(); }

Json json_of(const Alphabet& a, const Word& w) { return word_str(a, w); }

Json json_of(const Alphabet& a, const ConditionReport& r) {
  Json j;
  j["condition"] = r.condition;
  j["holds"] = r.holds;
  if (r.witness) {
    Json w;
    w["cycle_word"] = word_str(a, r.witness->cycle_word);
    w["offset"] = r.witness->offset;
    w["segmentation"] = r.witness->segmentation;
    w["piece"] = word_str(a, r.witness->piece);
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  Json stats = Json::array();
  for (const auto& s : r.stats) {
    Json e;
    e["cycle_word"] = word_str(a, s.cycle_word);
    e["length"] = s.length;
    e["max_piece_subpath"] = s.max_piece_subpath;
    e["min_segmentation"] = s.min_segmentation;
    e["unsegmentable"] = s.unsegmentable;
    stats.push_back(std::move(e));
  }
  j["stats"] = std::move(stats);
  return j;
}

Json json_of(const Alphabet& a, const PieceReport& r) {
  Json j;
  j["word"] = word_str(a, r.word);
  j["witness_starts"] = r.witness_starts;
  j["piece"] = r.piece;
  j["essential"] = r.essential;
  return j;
}

Json json_of(const Presentation& p) {
  Json j;
  j["alphabet"] = p.alphabet.tokens();
  Json rel = Json::array();
  for (size_t i = 0; i < p.relators.size(); ++i) {
    Json e;
    e["word"] = word_str(p.alphabet, p.relators[i]);
    e["component"] = p.provenance[i].component;
    e["kind"] = p.provenance[i].kind;
    rel.push_back(std::move(e));
  }
  j["relators"] = std::move(rel);
  return j;
}

namespace {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Trivial:
      return "Trivial";
    case Verdict::InfiniteCyclic:
      return "InfiniteCyclic";
    case Verdict::FreeOfRank:
      return "FreeOfRank";
    case Verdict::ContainsFreeSubgroup:
      return "ContainsFreeSubgroup";
    case Verdict::Inconclusive:
      return "Inconclusive";
  }
  return "Inconclusive";
}

}  // namespace

Json json_of(const Alphabet& a, const Classification& c) {
  Json j;
  j["verdict"] = verdict_name(c.verdict);
  if (c.verdict == Verdict::FreeOfRank) j["rank"] = c.rank;
  j["reason"] = c.reason;
  j["theorem_only"] = c.theorem_only;
  if (c.witness) {
    Json w;
    w["alpha"] = word_str(a, c.witness->alpha);
    w["beta"] = word_str(a, c.witness->beta);
    Json cyc = Json::array();
    for (const auto& fc : c.witness->cycles) {
      Json e;
      e["cycle_word"] = word_str(a, fc.cycle_word);
      e["x"] = fc.x;
      e["y"] = fc.y;
      e["arc_word"] = word_str(a, fc.arc_word);
      cyc.push_back(std::move(e));
    }
    w["cycles"] = std::move(cyc);
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  if (c.reduction) {
    Json audit = Json::array();
    for (const auto& rem : c.reduction->audit) {
      Json e;
      e["src"] = rem.src;
      e["dst"] = rem.dst;
      e["letter"] = rem.letter;
      e["cycle_word"] = word_str(a, rem.cycle_word);
      audit.push_back(std::move(e));
    }
    j["reduction_audit"] = std::move(audit);
  }
  return j;
}

Json json_of(const Presentation& p, const WordVerdict& v) {
  Json j;
  switch (v.kind) {
    case WordVerdict::Kind::Trivial:
      j["verdict"] = "Trivial";
      break;
    case WordVerdict::Kind::Nontrivial:
      j["verdict"] = "Nontrivial";
      break;
    case WordVerdict::Kind::Unknown:
      j["verdict"] = "Unknown";
      break;
  }
  j["nodes_expanded"] = v.nodes_expanded;
  Json steps = Json::array();
  for (const auto& s : v.derivation) {
    Json e;
    e["position"] = s.position;
    e["relator"] = s.relator;
    e["rotation"] = s.rotation;
    e["inverted"] = s.inverted;
    e["variant"] = word_str(p.alphabet, relator_variant(p, s));
    steps.push_back(std::move(e));
  }
  j["derivation"] = std::move(steps);
  if (v.certificate) {
    Json c;
    c["kind"] = v.certificate->kind;
    c["condition"] = v.certificate->condition;
    c["area_bound"] = v.certificate->area_bound;
    c["length_bound"] = v.certificate->length_bound;
    c["nodes"] = v.certificate->nodes;
    c["detail"] = v.certificate->detail;
    j["certificate"] = std::move(c);
  } else {
    j["certificate"] = nullptr;
  }
  return j;
}

Json json_of(const EmbeddingReport& r) {
  Json j;
  j["injective"] = r.injective;
  j["isometric"] = r.isometric;
  j["certified"] = r.certified;
  Json pairs = Json::array();
  for (const auto& p : r.pairs) {
    Json e;
    e["u"] = p.u;
    e["v"] = p.v;
    e["d_graph"] = p.d_graph;
    e["d_cayley"] = p.d_cayley;
    e["certified"] = p.certified;
    pairs.push_back(std::move(e));
  }
  j["pairs"] = std::move(pairs);
  Json dist = Json::array();
  for (auto [u, v] : r.distortion) dist.push_back(Json{{"u", u}, {"v", v}});
  j["distortion"] = std::move(dist);
  return j;
}

Json json_of(const SparseCheckResult& r) {
  Json j;
  j["gap_found"] = r.gap_found;
  j["gap_index"] = r.gap_index;
  j["max_ratio"] = r.max_ratio.str();
  j["witness_a"] = r.witness_a ? Json(r.witness_a->str()) : Json(nullptr);
  j["prefix_size"] = r.prefix_size;
  return j;
}

Json json_of(const LacunaryReport& r) {
  Json j;
  j["mode"] = r.mode;
  j["girths"] = r.girths;
  Json ratios = Json::array();
  for (const auto& q : r.diameter_girth_ratios) ratios.push_back(q.str());
  j["diameter_girth_ratios"] = std::move(ratios);
  j["C"] = r.C.str();
  Json sel = Json::array();
  for (const auto& s : r.selected) {
    Json e;
    e["index"] = s.index;
    e["girth"] = s.girth;
    e["inequality"] = s.inequality;
    sel.push_back(std::move(e));
  }
  j["selected"] = std::move(sel);
  j["status"] = r.status;
  return j;
}

Json json_of(const DiagramReport& r) {
  Json j;
  j["area"] = r.area;
  j["boundary_length"] = r.boundary_length;
  j["interior_edges"] = r.interior_edges;
  j["boundary_faces"] = r.boundary_faces;
  j["interior_faces"] = r.interior_faces;
  j["arcs"] = r.arcs;
  j["spurs"] = r.spurs;
  return j;
}

}  // namespace grsc
