#pragma once

#include "rescuesim/scene.hpp"

#include <filesystem>

namespace rescuesim {

// Loads and validates a scene file, resolving category names against the
// pool. Throws IoError / SchemaError / InvariantError; never repairs input.
Scene load_scene(const std::filesystem::path& path, const CategoryPool& pool);

// Writes a validated scene with canonical key order and indentation, so two
// saves of the same scene are byte-identical. Refuses invalid scenes and
// never leaves a partial file behind.
void save_scene(const Scene& scene, const std::filesystem::path& path);

// Structural equality on the serialized schema (runtime state excluded).
bool scene_equal(const Scene& a, const Scene& b);

} // namespace rescuesim
