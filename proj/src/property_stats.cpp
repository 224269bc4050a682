#include "kgevo/property_stats.hpp"

#include <algorithm>

namespace kgevo {

PropertyRanking rank_properties(const ChangeSet& cs, std::size_t top_k) {
  std::map<std::string, PropertyChangeRecord> by_property;
  for (const Triple& t : cs.added) by_property[t.predicate.value].added_count += 1;
  for (const Triple& t : cs.deleted) by_property[t.predicate.value].removed_count += 1;

  PropertyRanking ranking;
  for (auto& [property, rec] : by_property) {
    rec.property = property;
    rec.edited_count = rec.added_count + rec.removed_count;
    if (rec.edited_count >= 1 && rec.edited_count <= 20)
      ranking.low_frequency_histogram[rec.edited_count] += 1;
    ranking.records.push_back(std::move(rec));
  }
  std::sort(ranking.records.begin(), ranking.records.end(),
            [](const PropertyChangeRecord& a, const PropertyChangeRecord& b) {
              if (a.edited_count != b.edited_count) return a.edited_count > b.edited_count;
              return a.property < b.property;
            });
  if (ranking.records.size() > top_k) ranking.records.resize(top_k);
  return ranking;
}

void relative_rates(PropertyRanking& ranking, const Snapshot& old_snapshot) {
  std::map<std::string, std::uint64_t> occurrence;
  const Dictionary& dict = *old_snapshot.dict;
  for (const EncodedTriple& e : old_snapshot.triples) occurrence[dict.decode(e.p).value] += 1;
  for (PropertyChangeRecord& rec : ranking.records) {
    auto it = occurrence.find(rec.property);
    rec.occurrence_old = it == occurrence.end() ? 0 : it->second;
    if (rec.occurrence_old > 0) {
      rec.ratio = static_cast<double>(rec.edited_count) / static_cast<double>(rec.occurrence_old);
    } else {
      rec.ratio.reset();  // new property, excluded from ratio ranking
    }
  }
}

std::vector<TypeMigration> type_migrations(const Snapshot& old_snapshot,
                                           const Snapshot& new_snapshot,
                                           const TypeMigrationConfig& cfg) {
  using TypeMap = std::map<std::string, std::set<std::string>>;
  auto types_of = [&cfg](const Snapshot& s) {
    TypeMap types;
    const Dictionary& dict = *s.dict;
    for (const EncodedTriple& e : s.triples) {
      if (dict.decode(e.p).value != cfg.type_predicate) continue;
      const Term& obj = dict.decode(e.o);
      if (!obj.is_resource()) continue;
      types[dict.decode(e.s).label()].insert(obj.label());
    }
    return types;
  };
  TypeMap old_types = types_of(old_snapshot);
  TypeMap new_types = types_of(new_snapshot);

  // (property, object) pairs present in both versions, object non-literal.
  auto property_objects = [&cfg](const Snapshot& s) {
    std::set<std::pair<std::string, std::string>> pairs;
    const Dictionary& dict = *s.dict;
    for (const EncodedTriple& e : s.triples) {
      const Term& pred = dict.decode(e.p);
      if (pred.value == cfg.type_predicate) continue;
      if (cfg.property_filter && !cfg.property_filter->count(pred.value)) continue;
      const Term& obj = dict.decode(e.o);
      if (!obj.is_resource()) continue;
      pairs.emplace(pred.value, obj.label());
    }
    return pairs;
  };
  std::set<std::pair<std::string, std::string>> old_pairs = property_objects(old_snapshot);
  std::set<std::pair<std::string, std::string>> new_pairs = property_objects(new_snapshot);

  std::map<std::tuple<std::string, std::string, std::string>, std::uint64_t> counts;
  for (const auto& pair : old_pairs) {
    if (!new_pairs.count(pair)) continue;
    const auto& [property, object] = pair;
    auto ot = old_types.find(object);
    auto nt = new_types.find(object);
    const std::set<std::string> empty;
    const std::set<std::string>& before = ot == old_types.end() ? empty : ot->second;
    const std::set<std::string>& after = nt == new_types.end() ? empty : nt->second;
    std::vector<std::string> lost, gained;
    std::set_difference(before.begin(), before.end(), after.begin(), after.end(),
                        std::back_inserter(lost));
    std::set_difference(after.begin(), after.end(), before.begin(), before.end(),
                        std::back_inserter(gained));
    for (const std::string& from : lost) {
      for (const std::string& to : gained) counts[{property, from, to}] += 1;
    }
  }

  std::vector<TypeMigration> out;
  for (const auto& [key, count] : counts) {
    if (count < cfg.min_count) continue;
    const auto& [property, from, to] = key;
    out.push_back({property, from, to, count});
  }
  return out;
}

}  // namespace kgevo
