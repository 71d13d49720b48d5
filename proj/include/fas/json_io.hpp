#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fas/fs_engine.hpp"
#include "fas/gadgets.hpp"
#include "fas/graph.hpp"
#include "fas/ncl.hpp"
#include "fas/reducer.hpp"
#include "fas/verifier.hpp"

namespace fas::io {

using Json = nlohmann::ordered_json;

/// Parses a file; throws InputError on I/O or syntax errors.
Json read_json_file(const std::string& path);
/// Pretty-printed with a trailing newline.
void write_json_file(const std::string& path, const Json& j);
void write_text_file(const std::string& path, const std::string& text);
std::string dump(const Json& j);

Json graph_to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const Json& j);

/// FAS instance file with optional per-person colors (names or class ids).
struct FasInstanceFile {
  FasInstance instance;
  Configuration sigma;
  Configuration sigma_prime;
  /// Classing built from "colors" when present.
  std::optional<ColorClassing> classing;
};

Json fas_file_to_json(const FasInstanceFile& f,
                      const std::optional<gadgets::ColorPattern>& colors = {});
FasInstanceFile fas_file_from_json(const Json& j);

Json witness_to_json(std::span<const SwapMove> moves);
std::vector<SwapMove> witness_from_json(const Json& j);
Json flips_to_json(std::span<const ncl::FlipMove> flips);

struct NclInstanceFile {
  ncl::NclGraph graph;
  std::optional<ncl::Orientation> from;
  std::optional<ncl::Orientation> to;
};

Json ncl_to_json(const ncl::NclGraph& g,
                 const std::optional<ncl::Orientation>& from = {},
                 const std::optional<ncl::Orientation>& to = {});
NclInstanceFile ncl_from_json(const Json& j);
Json orientation_to_json(const ncl::Orientation& o);
ncl::Orientation orientation_from_json(const Json& j);

/// Reduction bundle: instance, both configurations, colors and the
/// gadget maps.
Json bundle_to_json(const reduction::ReductionArtifact& art);

/// Transcription table of a blueprint: locations with names, coordinates and
/// colors, edges, ports and named locations.
Json blueprint_to_json(const gadgets::GadgetBlueprint& bp);
std::string blueprint_to_dot(const gadgets::GadgetBlueprint& bp);

Json report_to_json(const verify::EquivalenceReport& r);
Json report_to_json(const verify::GadgetReport& r);

}  // namespace fas::io
