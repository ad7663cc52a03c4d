__version__ = '0.1.0'
__appname__ = 'suncount: exact census of SU(N) invariants on tensor powers'
