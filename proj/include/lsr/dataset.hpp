#pragma once

#include <filesystem>
#include <vector>

namespace lsr {

struct DatasetEntry {
    std::filesystem::path image;
    std::filesystem::path annotation;
};

// Index over a dataset laid out as <root>/images/<stem>.pgm plus
// <root>/annotations/<stem>.json. Loading verifies that every pair exists
// and that each annotation fits its image's dimensions.
class DatasetIndex {
public:
    static DatasetIndex load(const std::filesystem::path& root);

    const std::filesystem::path& root() const { return root_; }
    const std::vector<DatasetEntry>& entries() const { return entries_; }

private:
    std::filesystem::path root_;
    std::vector<DatasetEntry> entries_;
};

}  // namespace lsr
