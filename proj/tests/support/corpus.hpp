#pragma once

#include <string>
#include <vector>

#include "trispec/document.hpp"
#include "trispec/triring.hpp"

namespace corpus {

/// Fixture stems of every valid triring shipped in fixtures/.
const std::vector<std::string>& valid_names();
/// Fixture stems that must be rejected by build_triring.
const std::vector<std::string>& invalid_names();

std::string path(const std::string& name);
trispec::TriringDocument document(const std::string& name);
trispec::Triring load(const std::string& name);

}  // namespace corpus
