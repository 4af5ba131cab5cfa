// placeholder, implemented in a later build step
