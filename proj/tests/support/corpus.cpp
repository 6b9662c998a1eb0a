#include "corpus.hpp"

namespace corpus {

const std::vector<std::string>& valid_names() {
  static const std::vector<std::string> names{
      "z4z2",     "triquaternion_z2", "triquaternion_z3", "z6",   "z8",           "z2xz2",   "z2xz2_z2",
      "z2xz3_z3", "z4z4",             "z8z4",             "z9z3", "f4_frobenius", "dual_z2",
  };
  return names;
}

const std::vector<std::string>& invalid_names() {
  static const std::vector<std::string> names{"corrupted_lambda", "triquaternion_z5", "z3xz3_swap"};
  return names;
}

std::string path(const std::string& name) { return std::string(TRISPEC_FIXTURE_DIR) + "/" + name + ".triring"; }

trispec::TriringDocument document(const std::string& name) { return trispec::read_document_file(path(name)); }

trispec::Triring load(const std::string& name) { return trispec::build_from_document(document(name)); }

}  // namespace corpus
