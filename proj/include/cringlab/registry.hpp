#pragma once

#include "cringlab/io.hpp"

namespace cringlab {

struct FixtureInfo {
    std::string name;
    std::string summary;
};

const std::vector<FixtureInfo>& fixture_list();
/// Throws UnknownReference for an unregistered name.
Document build_fixture(const std::string& name);

}  // namespace cringlab
