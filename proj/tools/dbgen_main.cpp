// Regenerates the shipped decomposition database file from the builtin set.

#include <cstdio>

#include "stabsim/database.hpp"

int main(int argc, char** argv) {
  const char* path = argc > 1 ? argv[1] : "data/decompositions.sdb";
  auto db = stabsim::Database::builtin();
  db.save(path);
  std::printf("wrote %zu entries to %s\n", db.all().size(), path);
  return 0;
}
