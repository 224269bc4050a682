// kgevo: batch CLI over the knowledge-graph evolution toolkit.
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kgevo/community.hpp"
#include "kgevo/events.hpp"
#include "kgevo/evolution.hpp"
#include "kgevo/graph.hpp"
#include "kgevo/io.hpp"
#include "kgevo/metrics.hpp"
#include "kgevo/ontology.hpp"
#include "kgevo/perturb.hpp"
#include "kgevo/property_stats.hpp"
#include "kgevo/store.hpp"
#include "kgevo/transe.hpp"

namespace {

using nlohmann::json;
using namespace kgevo;

void emit(const std::string& out_path, const std::string& data) {
  if (out_path.empty()) {
    std::cout << data;
  } else {
    write_file(out_path, data);
  }
}

std::vector<Triple> parse_file(const std::string& path, bool strict) {
  ParseResult r = parse_ntriples(read_file(path), strict);
  for (const ParseError& e : r.errors) {
    std::cerr << path << ":" << e.line << ": " << errc_name(e.code) << ": " << e.message << "\n";
  }
  if (strict && !r.errors.empty()) fail(r.errors.front().code, "strict parse aborted");
  return std::move(r.triples);
}

std::set<std::string> load_predicate_list(const std::string& path) {
  std::set<std::string> predicates;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    predicates.insert(line.substr(start));
  }
  return predicates;
}

std::string now_iso8601() { return format_iso8601_utc(static_cast<std::int64_t>(std::time(nullptr))); }

json changeset_json(const ChangeSet& cs) {
  return {{"added", canonical_lines(cs.added)}, {"deleted", canonical_lines(cs.deleted)}};
}

json noteworthy_lines(const std::vector<NoteworthyReport>& reports, std::optional<int> community) {
  json lines = json::array();
  for (const NoteworthyReport& report : reports) {
    for (const Trigger& trigger : report.triggers) {
      json line{{"resource", report.resource}, {"key", trigger.key.to_string()},
                {"delta", trigger.delta},     {"mu", trigger.mu},
                {"sigma2", trigger.sigma2},   {"p", trigger.p}};
      if (community) line["community"] = *community;
      lines.push_back(std::move(line));
    }
  }
  return lines;
}

std::string dump_lines(const json& lines) {
  std::string out;
  for (const json& line : lines) {
    out += line.dump();
    out += '\n';
  }
  return out;
}

const char* event_name(EventKind kind) {
  switch (kind) {
    case EventKind::persist: return "persist";
    case EventKind::emerge: return "emerge";
    case EventKind::disappear: return "disappear";
    case EventKind::merge: return "merge";
    case EventKind::split: return "split";
  }
  return "?";
}

// Change timestamp of a materialized version: an in-data dct:modified value
// wins over the commit metadata.
std::string change_timestamp(const Snapshot& snapshot) {
  if (auto modified = dct_modified_of(snapshot)) return *modified;
  return snapshot.meta.timestamp;
}

std::vector<OntologyChange> store_history(const VersionStore& store, const std::string& name) {
  std::vector<OntologyChange> changes;
  const auto& records = store.log();
  for (std::size_t i = 1; i < records.size(); ++i) {
    ChangeSet cs = store.changeset(records[i - 1].id, records[i].id);
    changes.push_back(
        make_change(name, change_timestamp(store.materialize(records[i].id)), cs));
  }
  return changes;
}

struct CommonGraphFlags {
  std::string predicates_file;
  bool include_rdf_type = false;

  ProjectionConfig projection() const {
    ProjectionConfig cfg;
    cfg.include_rdf_type = include_rdf_type;
    if (!predicates_file.empty()) cfg.predicate_allowlist = load_predicate_list(predicates_file);
    return cfg;
  }
  void attach(CLI::App* cmd) {
    cmd->add_option("--predicates", predicates_file,
                    "file with one predicate IRI per line; restricts the projection");
    cmd->add_flag("--include-rdf-type", include_rdf_type,
                  "keep rdf:type edges in the projection");
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kgevo: versioned knowledge-graph storage and evolution analytics"};
  app.require_subcommand(1);
  app.fallthrough();  // --store and -o may follow the subcommand

  std::string store_path;
  app.add_option("--store", store_path, "version store directory")
      ->envname("KGEVO_STORE");

  std::string out_path;
  app.add_option("-o,--output", out_path, "write the report to a file instead of stdout");

  std::function<int()> action;

  // ---- parse ----------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("parse", "parse N-Triples and print the canonical form");
    auto file = std::make_shared<std::string>();
    auto strict = std::make_shared<bool>(false);
    cmd->add_option("file", *file, "input .nt or .nt.gz")->required();
    cmd->add_flag("--strict", *strict, "abort on the first malformed line");
    cmd->callback([&, file, strict] {
      action = [&, file, strict] {
        emit(out_path, canonical_serialize(parse_file(*file, *strict)));
        return 0;
      };
    });
  }

  // ---- commit ---------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("commit", "commit a snapshot file to the store");
    auto file = std::make_shared<std::string>();
    auto meta = std::make_shared<SnapshotMeta>();
    auto strict = std::make_shared<bool>(false);
    cmd->add_option("file", *file, "input .nt or .nt.gz")->required();
    cmd->add_option("--label", meta->label, "snapshot label")->required();
    cmd->add_option("--timestamp", meta->timestamp, "ISO-8601 UTC instant (default: now)");
    cmd->add_option("--source", meta->source, "provenance note");
    cmd->add_flag("--strict", *strict, "abort on the first malformed line");
    cmd->callback([&, file, meta, strict] {
      action = [&, file, meta, strict] {
        if (meta->timestamp.empty()) meta->timestamp = now_iso8601();
        VersionStore store = VersionStore::open(store_path);
        std::cout << store.commit(parse_file(*file, *strict), *meta) << "\n";
        return 0;
      };
    });
  }

  // ---- log ------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("log", "list committed versions in order");
    cmd->callback([&] {
      action = [&] {
        VersionStore store = VersionStore::open(store_path);
        json lines = json::array();
        for (const VersionRecord& r : store.log()) {
          json rec{{"id", r.id},
                   {"timestamp", r.meta.timestamp},
                   {"label", r.meta.label},
                   {"kind", r.storage == StorageKind::full ? "full" : "delta"}};
          if (r.storage == StorageKind::delta) rec["base"] = r.base;
          if (!r.meta.source.empty()) rec["source"] = r.meta.source;
          lines.push_back(std::move(rec));
        }
        emit(out_path, lines.dump(2) + "\n");
        return 0;
      };
    });
  }

  // ---- materialize ----------------------------------------------------
  {
    auto* cmd = app.add_subcommand("materialize", "reconstruct a version as canonical N-Triples");
    auto id = std::make_shared<std::string>();
    cmd->add_option("version", *id, "version id")->required();
    cmd->callback([&, id] {
      action = [&, id] {
        VersionStore store = VersionStore::open(store_path);
        emit(out_path, canonical_serialize(store.materialize(*id).to_triples()));
        return 0;
      };
    });
  }

  // ---- diff -----------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("diff", "changeset between two versions");
    auto old_id = std::make_shared<std::string>();
    auto new_id = std::make_shared<std::string>();
    cmd->add_option("old", *old_id, "older version id")->required();
    cmd->add_option("new", *new_id, "newer version id")->required();
    cmd->callback([&, old_id, new_id] {
      action = [&, old_id, new_id] {
        VersionStore store = VersionStore::open(store_path);
        emit(out_path, changeset_json(store.changeset(*old_id, *new_id)).dump(2) + "\n");
        return 0;
      };
    });
  }

  // ---- verify ---------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("verify", "check a version id against its stored content");
    auto id = std::make_shared<std::string>();
    cmd->add_option("version", *id, "version id")->required();
    cmd->callback([&, id] {
      action = [&, id] {
        VersionStore store = VersionStore::open(store_path);
        if (store.verify(*id)) {
          std::cout << "OK\n";
          return 0;
        }
        std::cout << "FAIL\n";
        return 2;
      };
    });
  }

  // ---- noteworthy -----------------------------------------------------
  {
    auto* cmd = app.add_subcommand("noteworthy", "flag resources deviating from the expected evolution");
    auto old_id = std::make_shared<std::string>();
    auto new_id = std::make_shared<std::string>();
    auto theta = std::make_shared<double>(0.05);
    auto local = std::make_shared<bool>(false);
    auto families = std::make_shared<std::string>("types,props,typeprops");
    auto type_predicate = std::make_shared<std::string>(iri::rdf_type);
    auto graph_flags = std::make_shared<CommonGraphFlags>();
    cmd->add_option("old", *old_id)->required();
    cmd->add_option("new", *new_id)->required();
    cmd->add_option("--theta", *theta, "sensitivity threshold in (0,1)");
    cmd->add_flag("--local", *local, "flag per community of the older snapshot");
    cmd->add_option("--features", *families, "comma list of: types, props, typeprops");
    cmd->add_option("--type-predicate", *type_predicate, "typing predicate IRI");
    graph_flags->attach(cmd);
    cmd->callback([&, old_id, new_id, theta, local, families, type_predicate, graph_flags] {
      action = [&, old_id, new_id, theta, local, families, type_predicate, graph_flags] {
        VersionStore store = VersionStore::open(store_path);
        ChangeSet cs = store.changeset(*old_id, *new_id);
        Snapshot old_snapshot = store.materialize(*old_id);

        FeatureConfig fc;
        fc.type_predicate = *type_predicate;
        fc.track_types = fc.track_props = fc.track_type_props = false;
        std::stringstream family_list(*families);
        std::string family;
        while (std::getline(family_list, family, ',')) {
          if (family == "types") fc.track_types = true;
          else if (family == "props") fc.track_props = true;
          else if (family == "typeprops") fc.track_type_props = true;
          else fail(Errc::invalid_input, "unknown feature family '" + family + "'");
        }

        TypeIndex types = build_type_index(old_snapshot, *type_predicate);
        std::vector<FeatureVector> vectors = extract_features(cs, types, fc);
        json lines = json::array();
        if (vectors.empty()) {
          emit(out_path, "");
          return 0;
        }
        if (*local) {
          UndirectedGraph g = project(old_snapshot, graph_flags->projection());
          CommunityResult partition = detect_communities(g);
          std::vector<Community> communities =
              make_communities(old_snapshot, g, partition.best);
          for (const auto& [community, reports] :
               local_noteworthy(vectors, communities, *theta)) {
            json community_lines = noteworthy_lines(reports, community);
            lines.insert(lines.end(), community_lines.begin(), community_lines.end());
          }
        } else {
          lines = noteworthy_lines(flag_noteworthy(vectors, describe_evolution(vectors), *theta),
                                   std::nullopt);
        }
        emit(out_path, dump_lines(lines));
        return 0;
      };
    });
  }

  // ---- communities ----------------------------------------------------
  {
    auto* cmd = app.add_subcommand("communities", "Girvan-Newman partition of a version");
    auto id = std::make_shared<std::string>();
    auto graph_flags = std::make_shared<CommonGraphFlags>();
    cmd->add_option("version", *id)->required();
    graph_flags->attach(cmd);
    cmd->callback([&, id, graph_flags] {
      action = [&, id, graph_flags] {
        VersionStore store = VersionStore::open(store_path);
        Snapshot snapshot = store.materialize(*id);
        UndirectedGraph g = project(snapshot, graph_flags->projection());
        CommunityResult result = detect_communities(g);
        json out = json::array();
        for (std::size_t c = 0; c < result.best.size(); ++c) {
          json nodes = json::array();
          for (NodeId v : result.best[c]) nodes.push_back(g.labels[v]);
          out.push_back({{"community", c}, {"nodes", std::move(nodes)}});
        }
        emit(out_path, out.dump(2) + "\n");
        return 0;
      };
    });
  }

  // ---- events ---------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("events", "community evolution events between two versions");
    auto old_id = std::make_shared<std::string>();
    auto new_id = std::make_shared<std::string>();
    auto cfg = std::make_shared<EventConfig>();
    auto basis = std::make_shared<std::string>("triples");
    auto graph_flags = std::make_shared<CommonGraphFlags>();
    cmd->add_option("old", *old_id)->required();
    cmd->add_option("new", *new_id)->required();
    cmd->add_option("--omega", cfg->omega_overlap, "overlap threshold in (0,1]");
    cmd->add_option("--basis", *basis, "overlap basis: triples or nodes")
        ->check(CLI::IsMember({"triples", "nodes"}));
    graph_flags->attach(cmd);
    cmd->callback([&, old_id, new_id, cfg, basis, graph_flags] {
      action = [&, old_id, new_id, cfg, basis, graph_flags] {
        cfg->basis = *basis == "nodes" ? OverlapBasis::nodes : OverlapBasis::triples;
        VersionStore store = VersionStore::open(store_path);
        Snapshot old_snapshot = store.materialize(*old_id);
        Snapshot new_snapshot = store.materialize(*new_id);
        ProjectionConfig pc = graph_flags->projection();
        UndirectedGraph g_old = project(old_snapshot, pc);
        UndirectedGraph g_new = project(new_snapshot, pc);
        std::vector<Community> old_communities =
            make_communities(old_snapshot, g_old, detect_communities(g_old).best);
        std::vector<Community> new_communities =
            make_communities(new_snapshot, g_new, detect_communities(g_new).best);
        json lines = json::array();
        for (const EvolutionEvent& e : classify_events(old_communities, new_communities, *cfg)) {
          lines.push_back({{"event", event_name(e.kind)},
                           {"old", e.old_ids},
                           {"new", e.new_ids},
                           {"iou", e.iou}});
        }
        emit(out_path, dump_lines(lines));
        return 0;
      };
    });
  }

  // ---- metrics --------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("metrics", "structural measures of a version");
    auto id = std::make_shared<std::string>();
    auto other = std::make_shared<std::string>();
    auto damping = std::make_shared<double>(0.85);
    auto format = std::make_shared<std::string>("json");
    cmd->add_option("version", *id)->required();
    cmd->add_option("other", *other, "second version: adds per-node centrality deltas");
    cmd->add_option("--damping", *damping, "PageRank damping factor");
    cmd->add_option("--format", *format, "json, or csv for the degree histogram only")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->callback([&, id, other, damping, format] {
      action = [&, id, other, damping, format] {
        VersionStore store = VersionStore::open(store_path);
        Snapshot snapshot = store.materialize(*id);
        DirectedGraph g = build_directed(snapshot);
        DegreeStats degrees = degree_stats(g);

        if (*format == "csv") {
          std::string csv = "degree,count\n";
          for (const auto& [degree, count] : degrees.histogram)
            csv += std::to_string(degree) + "," + std::to_string(count) + "\n";
          emit(out_path, csv);
          return 0;
        }

        PageRankConfig pr;
        pr.damping = *damping;
        CentralityScores ranks = pagerank(g, pr);
        HitsScores hub_auth = hits(g);
        GraphExtent extent = radius_diameter(g.undirected());

        json degree_json = json::object();
        for (const auto& [node, d] : degrees.per_node)
          degree_json[node] = {{"in", d.n_in}, {"out", d.n_out}, {"ratio", d.ratio}};
        json histogram = json::array();
        for (const auto& [degree, count] : degrees.histogram)
          histogram.push_back({degree, count});
        json report{{"radius", extent.radius},
                    {"diameter", extent.diameter},
                    {"pagerank", ranks},
                    {"hits", {{"hub", hub_auth.hub}, {"authority", hub_auth.authority}}},
                    {"degrees", degree_json},
                    {"degree_histogram", histogram}};
        report["subgraph_of_other"] = nullptr;
        if (!other->empty()) {
          Snapshot other_snapshot = store.materialize(*other);
          report["subgraph_of_other"] = subgraph_included(snapshot, other_snapshot);
          DirectedGraph g2 = build_directed(other_snapshot);
          CentralityScores ranks2 = pagerank(g2, pr);
          json deltas = json::object();
          for (const auto& [node, score] : ranks2) {
            auto it = ranks.find(node);
            deltas[node] = score - (it == ranks.end() ? 0.0 : it->second);
          }
          for (const auto& [node, score] : ranks) {
            if (!ranks2.count(node)) deltas[node] = -score;
          }
          report["pagerank_delta"] = std::move(deltas);
        }
        emit(out_path, report.dump(2) + "\n");
        return 0;
      };
    });
  }

  // ---- rank-properties -------------------------------------------------
  {
    auto* cmd = app.add_subcommand("rank-properties", "property change-frequency ranking");
    auto old_id = std::make_shared<std::string>();
    auto new_id = std::make_shared<std::string>();
    auto top_k = std::make_shared<std::size_t>(20);
    auto histogram = std::make_shared<bool>(false);
    cmd->add_option("old", *old_id)->required();
    cmd->add_option("new", *new_id)->required();
    cmd->add_option("--top", *top_k, "number of ranked properties to keep");
    cmd->add_flag("--histogram", *histogram,
                  "emit the low-frequency histogram (1..20 edits) instead of the ranking");
    cmd->callback([&, old_id, new_id, top_k, histogram] {
      action = [&, old_id, new_id, top_k, histogram] {
        VersionStore store = VersionStore::open(store_path);
        PropertyRanking ranking = rank_properties(store.changeset(*old_id, *new_id), *top_k);
        relative_rates(ranking, store.materialize(*old_id));
        std::string csv;
        if (*histogram) {
          csv = "edited,properties\n";
          for (const auto& [edits, count] : ranking.low_frequency_histogram)
            csv += std::to_string(edits) + "," + std::to_string(count) + "\n";
        } else {
          csv = "property,added,removed,edited,occurrence_old,ratio\n";
          for (const PropertyChangeRecord& rec : ranking.records) {
            csv += rec.property + "," + std::to_string(rec.added_count) + "," +
                   std::to_string(rec.removed_count) + "," + std::to_string(rec.edited_count) +
                   "," + std::to_string(rec.occurrence_old) + ",";
            if (rec.ratio) csv += json(*rec.ratio).dump();
            csv += "\n";
          }
        }
        emit(out_path, csv);
        return 0;
      };
    });
  }

  // ---- type-dynamics ---------------------------------------------------
  {
    auto* cmd = app.add_subcommand("type-dynamics", "object type migrations per property");
    auto old_id = std::make_shared<std::string>();
    auto new_id = std::make_shared<std::string>();
    auto cfg = std::make_shared<TypeMigrationConfig>();
    auto predicates_file = std::make_shared<std::string>();
    cmd->add_option("old", *old_id)->required();
    cmd->add_option("new", *new_id)->required();
    cmd->add_option("--min-count", cfg->min_count, "drop migrations below this object count");
    cmd->add_option("--type-predicate", cfg->type_predicate, "typing predicate IRI");
    cmd->add_option("--predicates", *predicates_file, "restrict to these property IRIs");
    cmd->callback([&, old_id, new_id, cfg, predicates_file] {
      action = [&, old_id, new_id, cfg, predicates_file] {
        if (!predicates_file->empty())
          cfg->property_filter = load_predicate_list(*predicates_file);
        VersionStore store = VersionStore::open(store_path);
        std::vector<TypeMigration> migrations =
            type_migrations(store.materialize(*old_id), store.materialize(*new_id), *cfg);
        std::set<std::string> nodes;
        json edges = json::array();
        for (const TypeMigration& m : migrations) {
          nodes.insert(m.from_class);
          nodes.insert(m.to_class);
          edges.push_back({{"property", m.property},
                           {"from", m.from_class},
                           {"to", m.to_class},
                           {"count", m.object_count}});
        }
        json graph{{"nodes", nodes}, {"edges", std::move(edges)}};
        emit(out_path, graph.dump(2) + "\n");
        return 0;
      };
    });
  }

  // ---- onto-sync -------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("onto-sync",
                                   "evolutionary synchronisation of two ontology changes");
    auto ids = std::make_shared<std::vector<std::string>>();
    auto store_b = std::make_shared<std::string>();
    auto threshold_days = std::make_shared<double>(7.0);
    cmd->add_option("versions", *ids, "OLD_A NEW_A OLD_B NEW_B")->expected(4);
    cmd->add_option("--store-b", *store_b, "store of the second ontology (default: --store)");
    cmd->add_option("--threshold-days", *threshold_days, "synchronisation threshold T in days");
    cmd->callback([&, ids, store_b, threshold_days] {
      action = [&, ids, store_b, threshold_days] {
        VersionStore store_a = VersionStore::open(store_path);
        VersionStore second =
            VersionStore::open(store_b->empty() ? store_path : *store_b);
        ChangeSet cs_a = store_a.changeset((*ids)[0], (*ids)[1]);
        ChangeSet cs_b = second.changeset((*ids)[2], (*ids)[3]);
        OntologyChange a =
            make_change("a", change_timestamp(store_a.materialize((*ids)[1])), cs_a);
        OntologyChange b =
            make_change("b", change_timestamp(second.materialize((*ids)[3])), cs_b);
        SyncResult sync = evolutionary_sync(a, b, *threshold_days * 86400.0);
        json report{{"es", sync.es_seconds},
                    {"threshold", sync.threshold_seconds},
                    {"synchronized", sync.synchronized},
                    {"aligned", sync.aligned_terms}};
        emit(out_path, report.dump(2) + "\n");
        return 0;
      };
    });
  }

  // ---- onto-ed ---------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("onto-ed", "evolutionary dependency on an external ontology");
    auto external = std::make_shared<std::string>();
    auto threshold_days = std::make_shared<double>(7.0);
    cmd->add_option("--external", *external, "store of the dependency ontology")->required();
    cmd->add_option("--threshold-days", *threshold_days, "synchronisation threshold T in days");
    cmd->callback([&, external, threshold_days] {
      action = [&, external, threshold_days] {
        VersionStore own = VersionStore::open(store_path);
        VersionStore dependency = VersionStore::open(*external);
        DependencyResult result =
            evolutionary_dependency(store_history(own, "own"),
                                    store_history(dependency, "external"),
                                    *threshold_days * 86400.0);
        json report{{"ec", result.externally_induced},
                    {"sc", result.ontology_specific},
                    {"ed", result.ed}};
        emit(out_path, report.dump(2) + "\n");
        return 0;
      };
    });
  }

  // ---- schema-series ---------------------------------------------------
  {
    auto* cmd = app.add_subcommand("schema-series", "per-version schema counts as CSV");
    auto with_properties = std::make_shared<bool>(false);
    cmd->add_flag("--with-properties", *with_properties, "append a property_count column");
    cmd->callback([&, with_properties] {
      action = [&, with_properties] {
        VersionStore store = VersionStore::open(store_path);
        std::string csv = *with_properties
                              ? "timestamp,class_count,subclass_count,property_count\n"
                              : "timestamp,class_count,subclass_count\n";
        for (const VersionRecord& rec : store.log()) {
          SchemaCounts counts = schema_counts(store.materialize(rec.id));
          csv += rec.meta.timestamp + "," + std::to_string(counts.class_count) + "," +
                 std::to_string(counts.subclass_axiom_count);
          if (*with_properties) csv += "," + std::to_string(counts.property_count);
          csv += "\n";
        }
        emit(out_path, csv);
        return 0;
      };
    });
  }

  // ---- embed -----------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("embed", "train TransE embeddings on a version");
    auto id = std::make_shared<std::string>();
    auto cfg = std::make_shared<TransEConfig>();
    auto model_path = std::make_shared<std::string>("model.json");
    auto loss_csv = std::make_shared<std::string>();
    cmd->add_option("version", *id)->required();
    cmd->add_option("--dim", cfg->dim, "embedding dimension");
    cmd->add_option("--epochs", cfg->epochs, "training epochs");
    cmd->add_option("--seed", cfg->seed, "RNG seed");
    cmd->add_option("--lr", cfg->learning_rate, "SGD learning rate");
    cmd->add_option("--margin", cfg->margin, "ranking margin");
    cmd->add_option("--model", *model_path, "model output file");
    cmd->add_option("--loss-csv", *loss_csv, "write the per-epoch mean loss trace");
    cmd->callback([&, id, cfg, model_path, loss_csv] {
      action = [&, id, cfg, model_path, loss_csv] {
        VersionStore store = VersionStore::open(store_path);
        TrainResult result = train_transe(store.materialize(*id).to_triples(), *cfg);
        save_model(result.model, *model_path);
        if (!loss_csv->empty()) {
          std::string csv = "epoch,mean_loss\n";
          for (std::size_t i = 0; i < result.epoch_mean_loss.size(); ++i)
            csv += std::to_string(i + 1) + "," + json(result.epoch_mean_loss[i]).dump() + "\n";
          write_file(*loss_csv, csv);
        }
        std::cout << "entities " << result.model.entities.size() << " relations "
                  << result.model.relations.size() << " model " << *model_path << "\n";
        return 0;
      };
    });
  }

  // ---- simsem ----------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("simsem", "embedding-based semantic similarity of versions");
    auto v1 = std::make_shared<std::string>();
    auto v2 = std::make_shared<std::string>();
    auto model_path = std::make_shared<std::string>();
    cmd->add_option("v1", *v1, "version the model was trained on")->required();
    cmd->add_option("v2", *v2)->required();
    cmd->add_option("--model", *model_path, "model file")->required();
    cmd->callback([&, v1, v2, model_path] {
      action = [&, v1, v2, model_path] {
        VersionStore store = VersionStore::open(store_path);
        SemanticSimReport report = semantic_sim(store.materialize(*v1), store.materialize(*v2),
                                                load_model(*model_path));
        json out{{"aggregate", report.aggregate}, {"nodes", report.per_node}};
        emit(out_path, out.dump(2) + "\n");
        return 0;
      };
    });
  }

  // ---- matetee ---------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("matetee", "MateTee similarity of two embedded entities");
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    auto model_path = std::make_shared<std::string>();
    cmd->add_option("a", *a)->required();
    cmd->add_option("b", *b)->required();
    cmd->add_option("--model", *model_path, "model file")->required();
    cmd->callback([&, a, b, model_path] {
      action = [&, a, b, model_path] {
        double sim = matetee_sim(*a, *b, load_model(*model_path));
        json report{{"a", *a}, {"b", *b}, {"similarity", sim}};
        emit(out_path, report.dump() + "\n");
        return 0;
      };
    });
  }

  // ---- perturb ---------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("perturb", "random perturbation with ground truth");
    auto file = std::make_shared<std::string>();
    auto cfg = std::make_shared<PerturbConfig>();
    auto mode = std::make_shared<std::string>("update");
    auto truth_path = std::make_shared<std::string>();
    cmd->add_option("file", *file, "input .nt or .nt.gz")->required();
    cmd->add_option("--m", cfg->m, "number of target subjects");
    cmd->add_option("--alpha", cfg->alpha, "fraction of each subject's triples, in (0,1)");
    cmd->add_option("--mode", *mode, "add, delete, update, or all")
        ->check(CLI::IsMember({"add", "delete", "update", "all"}));
    cmd->add_option("--seed", cfg->seed, "RNG seed");
    cmd->add_option("--truth", *truth_path, "write the ground-truth changeset JSON here");
    cmd->callback([&, file, cfg, mode, truth_path] {
      action = [&, file, cfg, mode, truth_path] {
        if (*mode == "add") cfg->mode = PerturbMode::add;
        else if (*mode == "delete") cfg->mode = PerturbMode::del;
        else if (*mode == "update") cfg->mode = PerturbMode::update;
        else cfg->mode = PerturbMode::all;
        PerturbResult result = perturb(parse_file(*file, /*strict=*/true), *cfg);
        emit(out_path, canonical_serialize(result.snapshot));
        if (!truth_path->empty())
          write_file(*truth_path, changeset_json(result.ground_truth).dump(2) + "\n");
        return 0;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
