#pragma once

// JSON file formats for models, bundles and group presentations. Scalars are
// strings "p/q" or "p/q+r/s*i".

#include "sasaki/bundle.hpp"
#include "sasaki/group.hpp"
#include "sasaki/sasakian.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sasaki {

/// Malformed input; the message starts with the offending field path.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SasakianLieDatum parse_model(std::string_view text);
std::string serialize_model(const SasakianLieDatum& datum);

/// Diagonal bundles only: `diagonal[j]` is the connection 1-form on the j-th line.
FlatBundleDatum parse_bundle(std::string_view text);
std::string serialize_bundle(const FlatBundleDatum& bundle);

struct GroupFile {
    GroupPresentation presentation;
    std::optional<Representation> representation;
    std::map<std::string, int> matching;  // generator -> basis 1-form index, -1 for none
};

GroupFile parse_group(std::string_view text);
std::string serialize_group(const GroupFile& group);

/// Whole file as bytes; throws InputError when unreadable.
std::string read_file(const std::filesystem::path& path);

/// Bundled corpus: file name -> contents, in a fixed order.
std::vector<std::pair<std::string, std::string>> corpus_files();

}  // namespace sasaki
