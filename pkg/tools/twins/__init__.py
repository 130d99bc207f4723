"""Twin candidate tools"""
