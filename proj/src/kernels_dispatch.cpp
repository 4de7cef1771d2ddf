#include <atomic>

#include "sttrack/errors.hpp"
#include "sttrack/kernels.hpp"

namespace sttrack::kern {

namespace {
std::atomic<Mode> g_mode{Mode::automatic};
}

void set_mode(Mode m) {
    if (m == Mode::avx2 && avx2_ops() == nullptr)
        throw ConfigError("simd mode 'avx2' requested but AVX2 is not available on this machine");
    g_mode.store(m);
}

Mode mode() { return g_mode.load(); }

const Ops& ops() {
    switch (g_mode.load()) {
        case Mode::scalar:
            return scalar_ops();
        case Mode::avx2:
            return *avx2_ops();
        case Mode::automatic:
        default: {
            const Ops* a = avx2_ops();
            return a ? *a : scalar_ops();
        }
    }
}

Mode parse_mode(const std::string& name) {
    if (name == "auto") return Mode::automatic;
    if (name == "scalar") return Mode::scalar;
    if (name == "avx2") return Mode::avx2;
    throw ConfigError("unknown simd mode '" + name + "' (expected auto|scalar|avx2)");
}

}  // namespace sttrack::kern
