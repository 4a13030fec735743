# rotvac source package
