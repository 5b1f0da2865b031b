"""orthos: proofing tools for Greek."""
