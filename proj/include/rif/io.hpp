#pragma once

#include "rif/family.hpp"

#include <iosfwd>
#include <string>

namespace rif {

inline constexpr const char* kFamilyFormat = "rif-family/1";

KSetFamily read_family(std::istream& in);
KSetFamily read_family_file(const std::string& path);

void write_family(std::ostream& out, const KSetFamily& fam);
void write_family_file(const std::string& path, const KSetFamily& fam);

} // namespace rif
