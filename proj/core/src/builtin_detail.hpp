#pragma once

#include "qind/rubric.hpp"

namespace qind {

const Rubric& builtin_pocme();
const Rubric& builtin_fairst();

}  // namespace qind
