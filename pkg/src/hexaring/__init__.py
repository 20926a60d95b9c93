"""Codes over the non-unital rings H23 and H32."""
