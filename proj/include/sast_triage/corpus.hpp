#pragma once

#include "sast_triage/cwe.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sast_triage {

enum class Origin { SecurityEval, PyT, Other };

std::string_view origin_name(Origin o);
std::optional<Origin> parse_origin(std::string_view token);

/// One vulnerable source file. `lines` is 1-based via lines[i-1] and joins
/// back to source_text with '\n' modulo a single trailing newline.
struct CorpusFile {
    std::string id; // relative path, unique within a corpus
    std::string source_text;
    std::vector<std::string> lines;
    Origin origin = Origin::Other;

    bool operator==(const CorpusFile&) const = default;
};

/// Expert-asserted (file, CWE, line) ground truth. Lines are 1-based.
struct GroundTruthLabel {
    std::string file_id;
    CweId cwe;
    int line = 0;

    bool operator==(const GroundTruthLabel&) const = default;
};

struct DistributionMismatch {
    CweId cwe;
    int declared = 0;
    int observed = 0;

    bool operator==(const DistributionMismatch&) const = default;
};

struct CorpusManifest {
    struct FileEntry {
        std::string path;
        Origin origin = Origin::Other;
        bool operator==(const FileEntry&) const = default;
    };
    std::vector<FileEntry> files;
    std::vector<GroundTruthLabel> labels;
    std::map<CweId, int> declared_distribution;
};

struct Corpus {
    std::vector<CorpusFile> files;
    std::vector<GroundTruthLabel> labels;
    std::map<CweId, int> declared_distribution;

    const CorpusFile* find(std::string_view file_id) const;

    bool operator==(const Corpus&) const = default;
};

// Manifest format, one record per line, '#' starts a comment:
//   F <relative-path> <origin>
//   L <relative-path> <CWE-id> <line>
//   D <CWE-id> <count>
// UTF-8, LF or CRLF. Paths are resolved relative to the manifest's directory.
CorpusManifest parse_manifest(const std::filesystem::path& manifest_path);
CorpusManifest parse_manifest_text(std::string_view text);

Corpus load_corpus(const std::filesystem::path& manifest_path);

// Inverse of load: emits F/L/D records that reload to an equal corpus.
std::string serialize_manifest(const Corpus& corpus);

// One record per CWE whose observed label count differs from the declared
// count; a CWE missing on either side counts as 0 there.
std::vector<DistributionMismatch> validate_distribution(const std::vector<GroundTruthLabel>& labels,
                                                        const std::map<CweId, int>& declared);

} // namespace sast_triage
