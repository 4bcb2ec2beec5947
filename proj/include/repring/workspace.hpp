#pragma once

#include <map>
#include <optional>
#include <string>

#include "repring/amalgam.hpp"
#include "repring/json_io.hpp"

namespace repring {

struct WorkspaceOptions {
  int cap = kDefaultGroupCap;
  int oracle_bound = 6;
  bool include_identity_np = true;
};

/// A parsed input document: named groups, homomorphisms, amalgams and ring
/// presentations, plus global options. All references are resolved at load
/// time; cyclic or dangling references are input errors.
class Workspace {
 public:
  static Workspace from_json(const Json& doc, const WorkspaceOptions* overrides = nullptr);
  static Workspace from_file(const std::string& path, const WorkspaceOptions* overrides = nullptr);

  const WorkspaceOptions& options() const { return options_; }

  GroupPtr group(const std::string& name) const;
  const GroupHom& named_hom(const std::string& name) const;
  const Amalgam& amalgam(const std::string& name) const;
  const std::string& presentation_text(const std::string& name) const;

  std::vector<std::string> group_names() const;
  std::vector<std::string> amalgam_names() const;
  std::vector<std::string> presentation_names() const;

 private:
  WorkspaceOptions options_;
  std::map<std::string, GroupPtr> groups_;
  std::map<std::string, GroupHom> homs_;
  std::map<std::string, Amalgam> amalgams_;
  std::map<std::string, std::string> presentations_;
};

}  // namespace repring
