#pragma once

#include <vector>

namespace folham::corpus {

struct Entry {
    const char* name;
    const char* json;
};

// Generated at build time from the corpus directory.
const std::vector<Entry>& entries();

}  // namespace folham::corpus
