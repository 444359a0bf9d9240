"""
conelift.rays
=============
Project-and-lift computation of extreme rays.
"""
from .completion import complete_ray, minimize_rays, normal_form_ray, s_vector_ray
from .elements import RayElement, canonicalize_ray
from .lift import build_input_ray, extreme_rays

__all__ = [
    "RayElement",
    "canonicalize_ray",
    "build_input_ray",
    "s_vector_ray",
    "normal_form_ray",
    "complete_ray",
    "minimize_rays",
    "extreme_rays",
]
