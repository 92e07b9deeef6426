namespace qtwist {}
