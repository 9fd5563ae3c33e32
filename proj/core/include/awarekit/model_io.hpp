#ifndef AWAREKIT_MODEL_IO_HPP
#define AWAREKIT_MODEL_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "awarekit/model.hpp"

namespace awarekit {

struct LoadOptions {
  bool require_constancy = true;
};

// JSON model format; see README. Schema violations throw Error("BadModelFile").
Model model_from_json(std::string_view text, const LoadOptions& options = {});
Model load_model(const std::filesystem::path& path, const LoadOptions& options = {});

// Canonical serialisation (sorted keys, declared orders); stable across runs.
std::string model_to_json(const Model& m);

std::string read_file(const std::filesystem::path& path);

}  // namespace awarekit

#endif  // AWAREKIT_MODEL_IO_HPP
