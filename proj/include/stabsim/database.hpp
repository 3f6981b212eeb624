#ifndef STABSIM_DATABASE_HPP
#define STABSIM_DATABASE_HPP

#include <map>
#include <string>
#include <vector>

#include "stabsim/decomposition.hpp"

namespace stabsim {

struct DbEntry {
  std::string name;
  ProjectorDecomposition decomp;
  CMat target;       // the gate matrix the entry must reconstruct
  double tol;        // verified at load
  std::string note;  // provenance remark
};

class Database {
 public:
  const DbEntry& entry(const std::string& name) const;  // InputError when unknown
  bool has(const std::string& name) const;
  std::vector<std::string> names() const;
  const std::map<std::string, DbEntry>& all() const { return entries_; }

  void add(DbEntry e);  // verifies; ConsistencyError when the entry fails

  static Database builtin();
  static Database load(const std::string& path);
  void save(const std::string& path) const;

 private:
  std::map<std::string, DbEntry> entries_;
};

// Process-wide database: builtin entries, or the file named by STABSIM_DB.
const Database& database();

// Dense matrix of a named database gate (also usable without the entry).
CMat database_target(const std::string& name);

const ProjectorDecomposition& builtin_decomposition(const std::string& gate_name);

}  // namespace stabsim

#endif
