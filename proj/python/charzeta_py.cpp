#include <pybind11/pybind11.h>
PYBIND11_MODULE(charzeta, m) { m.doc() = "placeholder"; }
