#include "lsr/dataset.hpp"

#include <algorithm>
#include <map>

#include "lsr/formats.hpp"

namespace lsr {

namespace fs = std::filesystem;

DatasetIndex DatasetIndex::load(const fs::path& root) {
    const fs::path images_dir = root / "images";
    const fs::path annotations_dir = root / "annotations";
    if (!fs::is_directory(images_dir) || !fs::is_directory(annotations_dir))
        throw std::invalid_argument("DatasetIndex: " + root.string() +
                                    " must contain images/ and annotations/");

    std::map<std::string, fs::path> images;
    for (const fs::directory_entry& e : fs::directory_iterator(images_dir))
        if (e.is_regular_file() && e.path().extension() == ".pgm")
            images[e.path().stem().string()] = e.path();

    DatasetIndex index;
    index.root_ = root;
    for (const auto& [stem, image_path] : images) {
        const fs::path ann_path = annotations_dir / (stem + ".json");
        if (!fs::is_regular_file(ann_path))
            throw std::invalid_argument("DatasetIndex: missing annotation for " +
                                        image_path.string());
        // dimension check: the annotation must fit inside the image
        const GrayImage img = load_pgm(image_path);
        load_annotations(ann_path, img.width(), img.height());
        index.entries_.push_back({image_path, ann_path});
    }
    for (const fs::directory_entry& e : fs::directory_iterator(annotations_dir)) {
        if (e.is_regular_file() && e.path().extension() == ".json" &&
            !images.count(e.path().stem().string()))
            throw std::invalid_argument("DatasetIndex: missing image for " + e.path().string());
    }
    return index;
}

}  // namespace lsr
