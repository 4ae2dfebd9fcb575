# Tests package for Cauchy Engine
