#pragma once
#include <string>

namespace welsch {

enum class NodeType { solitary, non_solitary, imaginary_pair, degenerate };

std::string to_string(NodeType t);

// Sign of the Hessian determinant at a real double point: + solitary, - non-solitary, 0 degenerate.
inline NodeType node_type_from_hessian_sign(int s) {
    return s > 0 ? NodeType::solitary : (s < 0 ? NodeType::non_solitary : NodeType::degenerate);
}

}  // namespace welsch
