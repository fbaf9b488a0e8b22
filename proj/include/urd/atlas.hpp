#ifndef URD_ATLAS_HPP
#define URD_ATLAS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <urd/model.hpp>

namespace urd::atlas {

/// Thrown when a transcribed design fails verification or a development
/// collides; indicates a transcription defect and is fatal at build time.
struct TranscriptionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Base blocks developed by repeated translation.  Translation acts on the
/// residue of each vertex within consecutive blocks of size `modulus`:
/// p -> (p / modulus) * modulus + ((p % modulus) + step*i) % modulus,
/// which covers both plain Z_m development (modulus = v) and development
/// of the copy coordinate inside a blown design.
struct OrbitClassSpec {
    BlockKind kind;
    std::vector<Block> base_blocks;
    int step = 1;
    int count = 1;
    int modulus = 1;
};

/// Develops the base blocks into a resolution class; throws
/// TranscriptionError if translates collide on a vertex.
ResolutionClass develop(const OrbitClassSpec& spec, Scope scope = Scope::Full,
                        int missing_group = -1);

struct AtlasEntry {
    std::string id;
    Design design;
    std::string source;                                      // lemma-level citation
    std::vector<std::string> errata;                         // applied corrections
    std::vector<std::pair<std::string, Vertex>> labeling;    // symbolic point map
};

/// Verified entry lookup; throws std::out_of_range for unknown ids and
/// TranscriptionError if the stored design fails verification.
const AtlasEntry& get(const std::string& id);

std::vector<std::string> ids();

} // namespace urd::atlas

#endif
