#pragma once

namespace pompeiu {

enum class Verdict { Pompeiu, NotPompeiu, NoFailureFoundInRange };
enum class Method { Oracle, Spectral, Convolution, RadialShortcut, EuclideanSearch };

const char* to_string(Verdict v) noexcept;
const char* to_string(Method m) noexcept;

}  // namespace pompeiu
