#include "repring/workspace.hpp"

#include <fstream>
#include <set>

#include "repring/errors.hpp"

namespace repring {

namespace {

std::vector<std::pair<std::string, std::string>> label_map(const Json& j) {
  if (!j.is_object()) throw input_error("embedding map must be an object of label pairs");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [k, v] : j.items()) out.emplace_back(k, v.get<std::string>());
  return out;
}

class GroupResolver {
 public:
  GroupResolver(const Json& defs, int cap) : defs_(defs), cap_(cap) {}

  std::map<std::string, GroupPtr> resolve_all() {
    std::map<std::string, GroupPtr> out;
    for (const auto& [name, def] : defs_.items()) out[name] = resolve(name);
    return out;
  }

 private:
  const Json& defs_;
  int cap_;
  std::map<std::string, GroupPtr> done_;
  std::set<std::string> in_progress_;

  GroupPtr resolve(const std::string& name) {
    auto it = done_.find(name);
    if (it != done_.end()) return it->second;
    if (!defs_.contains(name)) throw input_error("unknown group reference \"" + name + "\"");
    if (!in_progress_.insert(name).second)
      throw input_error("cyclic group definition involving \"" + name + "\"");
    const Json& def = defs_.at(name);
    GroupPtr g;
    if (def.contains("cyclic")) {
      g = make_cyclic(def.at("cyclic").get<int>(), cap_);
    } else if (def.contains("product")) {
      const Json& refs = def.at("product");
      if (!refs.is_array() || refs.size() != 2)
        throw input_error("group \"" + name + "\": product takes exactly two references");
      g = direct_product(resolve(refs[0].get<std::string>()), resolve(refs[1].get<std::string>()),
                         cap_);
    } else if (def.contains("perm")) {
      const Json& p = def.at("perm");
      int degree = p.at("degree").get<int>();
      std::vector<Permutation> gens;
      for (const auto& gen : p.at("gens")) {
        std::vector<std::vector<int>> cycles;
        for (const auto& cyc : gen) cycles.push_back(cyc.get<std::vector<int>>());
        gens.push_back(perm_from_cycles(degree, cycles));
      }
      g = from_permutations(degree, gens, cap_);
    } else {
      throw input_error("group \"" + name + "\": expected one of cyclic / product / perm");
    }
    in_progress_.erase(name);
    done_[name] = g;
    return g;
  }
};

}  // namespace

Workspace Workspace::from_json(const Json& doc, const WorkspaceOptions* overrides) {
  if (!doc.is_object()) throw input_error("input document must be a JSON object");
  if (!doc.contains("schema") || doc.at("schema").get<int>() != 1)
    throw input_error("input document must declare \"schema\": 1");

  Workspace ws;
  if (doc.contains("options")) {
    const Json& opt = doc.at("options");
    if (opt.contains("cap")) ws.options_.cap = opt.at("cap").get<int>();
    if (opt.contains("oracle_bound")) ws.options_.oracle_bound = opt.at("oracle_bound").get<int>();
    if (opt.contains("include_identity_np"))
      ws.options_.include_identity_np = opt.at("include_identity_np").get<bool>();
  }
  if (overrides) ws.options_ = *overrides;

  if (doc.contains("groups")) {
    GroupResolver resolver(doc.at("groups"), ws.options_.cap);
    ws.groups_ = resolver.resolve_all();
  }

  auto lookup_group = [&](const std::string& name, const std::string& where) -> GroupPtr {
    auto it = ws.groups_.find(name);
    if (it == ws.groups_.end())
      throw input_error(where + ": unknown group reference \"" + name + "\"");
    return it->second;
  };

  if (doc.contains("homs")) {
    for (const auto& [name, def] : doc.at("homs").items()) {
      GroupPtr src = lookup_group(def.at("source").get<std::string>(), "hom \"" + name + "\"");
      GroupPtr tgt = lookup_group(def.at("target").get<std::string>(), "hom \"" + name + "\"");
      ws.homs_.emplace(name, hom_by_labels(src, tgt, label_map(def.at("images"))));
    }
  }

  if (doc.contains("amalgams")) {
    for (const auto& [name, def] : doc.at("amalgams").items()) {
      GroupPtr left = lookup_group(def.at("left").get<std::string>(), "amalgam \"" + name + "\"");
      GroupPtr right = lookup_group(def.at("right").get<std::string>(), "amalgam \"" + name + "\"");
      GroupPtr edge = lookup_group(def.at("edge").get<std::string>(), "amalgam \"" + name + "\"");
      GroupHom e1 = hom_by_labels(edge, left, label_map(def.at("embed_left")));
      GroupHom e2 = hom_by_labels(edge, right, label_map(def.at("embed_right")));
      ws.amalgams_.emplace(name, make_amalgam(left, right, edge, std::move(e1), std::move(e2)));
    }
  }

  if (doc.contains("presentations")) {
    for (const auto& [name, def] : doc.at("presentations").items())
      ws.presentations_[name] = def.get<std::string>();
  }
  return ws;
}

Workspace Workspace::from_file(const std::string& path, const WorkspaceOptions* overrides) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open input document: " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error("input document is not valid JSON: " + std::string(e.what()));
  }
  return from_json(doc, overrides);
}

GroupPtr Workspace::group(const std::string& name) const {
  auto it = groups_.find(name);
  if (it == groups_.end()) throw input_error("unknown group \"" + name + "\"");
  return it->second;
}

const GroupHom& Workspace::named_hom(const std::string& name) const {
  auto it = homs_.find(name);
  if (it == homs_.end()) throw input_error("unknown hom \"" + name + "\"");
  return it->second;
}

const Amalgam& Workspace::amalgam(const std::string& name) const {
  auto it = amalgams_.find(name);
  if (it == amalgams_.end()) throw input_error("unknown amalgam \"" + name + "\"");
  return it->second;
}

const std::string& Workspace::presentation_text(const std::string& name) const {
  auto it = presentations_.find(name);
  if (it == presentations_.end()) throw input_error("unknown presentation \"" + name + "\"");
  return it->second;
}

std::vector<std::string> Workspace::group_names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : groups_) out.push_back(k);
  return out;
}

std::vector<std::string> Workspace::amalgam_names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : amalgams_) out.push_back(k);
  return out;
}

std::vector<std::string> Workspace::presentation_names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : presentations_) out.push_back(k);
  return out;
}

}  // namespace repring
