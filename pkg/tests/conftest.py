from hypothesis import settings

# first calls may pay numba compilation or cache loading
settings.register_profile("snzeros", deadline=None)
settings.load_profile("snzeros")
