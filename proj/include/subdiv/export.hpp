#pragma once

#include <string>
#include <vector>

#include "subdiv/refine.hpp"
#include "subdiv/scene.hpp"

namespace subdiv {

/// Input polygons dashed, refined curves solid, flagged vertices as filled
/// circles. Uses the x and y coordinates only.
std::string write_svg(const std::vector<RefinedPolygon>& polygons);

/// Vertices `v x y z` and quad faces; closed directions wrap around.
std::string write_obj(const std::vector<RefinedMesh>& meshes);

/// Plot of basic limit function samples.
std::string write_basis_svg(const BasisSamples& samples, const std::string& title);

struct WrittenFile {
  std::string path;
  std::size_t bytes = 0;
};

/// Writes each export target of the scene below `output_dir`. Without
/// targets, writes scene.svg for polygons and scene.obj for meshes.
std::vector<WrittenFile> write_exports(const Scene& scene, const SceneResult& result, const std::string& output_dir);

}  // namespace subdiv
